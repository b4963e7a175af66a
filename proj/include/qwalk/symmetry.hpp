#pragma once

#include "qwalk/multiparticle.hpp"

#include <vector>

namespace qwalk {

// the two complete subgraphs of eigenstate k; odd k shares k-1's split
struct Partition {
    int n = 0;
    unsigned long k = 0;
    std::vector<int> s_up;   // particles whose bit in k is 1
    std::vector<int> s_down; // the rest, always containing particle n
    long p = 0;              // state-preserving transpositions

    int n_up() const { return static_cast<int>(s_up.size()); }
    int n_down() const { return static_cast<int>(s_down.size()); }
    bool same_side(int i, int j) const;
};

Partition partition(int n, unsigned long k);

// swap the coin labels of particles i and j in every basis index
std::vector<long long> apply_transposition(const std::vector<long long>& v, int n, int i, int j);
CoinVector apply_transposition(const CoinVector& a, int i, int j);

// exhaustive: transpositions leaving the integer eigenvector unchanged
long count_preserving_swaps(int n, unsigned long k);

// closed-form rule: bits of k (last bit read as 0) agree on i and j
bool swap_preserves(int n, unsigned long k, int i, int j);

// k with the same weight and identical spectrum; permutes particle labels
// so the 1-bits of k land on the 1-bits of target
std::vector<int> relabeling(int n, unsigned long k, unsigned long target);
CoinVector relabel(const CoinVector& a, const std::vector<int>& perm);

} // namespace qwalk
