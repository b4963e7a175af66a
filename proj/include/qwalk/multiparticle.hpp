#pragma once

#include "qwalk/walk.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qwalk {

// joint coin amplitudes a_xi; particle i (1-based) sits on bit n-i,
// so particle 1 is the most significant bit
struct CoinVector {
    int n = 0;
    std::vector<cplx> amp;

    CoinVector() = default;
    CoinVector(int n_, std::vector<cplx> a);

    static CoinVector basis(int n, unsigned long xi);
    static CoinVector from_real(int n, const std::vector<double>& v); // normalizes

    int bit_of(int i) const { return n - i; }
    int coin_of(unsigned long xi, int i) const { return static_cast<int>((xi >> bit_of(i)) & 1UL); }
    size_t dim() const { return amp.size(); }
};

using Positions = std::vector<long>; // empty means all at the origin

struct MomentTable {
    int t = 0;
    Mat2 X{}, X2{};    // [s'][s]
    cplx T[2][2][2][2]{}; // [c'][c][s'][s]
};

MomentTable moment_table(int t);
// one stepping pass; element t of the result is the table after t steps
std::vector<MomentTable> moment_tables(int t_max);

// position-shifted single-particle blocks
Mat2 shifted_x(const MomentTable& m, long x0);
Mat2 shifted_x2(const MomentTable& m, long x0);

double mean_x(const MomentTable& m, const CoinVector& a, int i, const Positions& pos = {});
double mean_x2(const MomentTable& m, const CoinVector& a, int i, const Positions& pos = {});
double pair_moment(const MomentTable& m, const CoinVector& a, int j, int k, const Positions& pos = {});

double mean_x(int i, const CoinVector& a, int t);
double mean_x2(int i, const CoinVector& a, int t);
double pair_moment(int j, int k, const CoinVector& a, int t);

struct JointDistribution {
    int j = 0, k = 0;
    int t = 0;
    long lo_a = 0, lo_b = 0; // lattice site of row/col 0
    long size = 0;           // grid is size x size, row index is particle j
    std::vector<double> p;

    double at(long a, long b) const;
    double total() const;
};

JointDistribution joint_distribution(int j, int k, const CoinVector& a, int t, const Positions& pos = {});

// coin density of a particle subset after t steps with every position traced out
Eigen::MatrixXcd reduced_coin_density(const CoinVector& a, const MomentTable& m, const std::vector<int>& subset);
Eigen::MatrixXcd reduced_coin_density(const CoinVector& a, int t, const std::vector<int>& subset);

// coin density of the initial vector on a subset (plain partial trace)
Eigen::MatrixXcd partial_coin_density(const CoinVector& a, const std::vector<int>& subset);

// explicit tensor-product state; only for small checks
class BruteForceState {
public:
    static constexpr int max_particles = 3;
    static constexpr int max_steps = 12;

    BruteForceState(const CoinVector& a, int t, const Positions& pos = {});

    int n() const { return n_; }
    int t() const { return t_; }

    double norm2() const;
    double mean_x(int i) const;
    double mean_x2(int i) const;
    double pair_moment(int j, int k) const;
    double mean_distance() const;
    JointDistribution joint_distribution(int j, int k) const;
    Eigen::MatrixXcd coin_density(const std::vector<int>& subset) const;
    // position+coin density of one particle
    Eigen::MatrixXcd particle_density(int i) const;

private:
    int n_, t_;
    long L_; // local axis length 2*(2t+1)
    Positions pos_;
    std::vector<cplx> psi_;

    long stride(int i) const;
    long site(int i, long local) const { return pos_[i - 1] + local / 2 - t_; }
    void step_axis(int i, int cur_t);
};

} // namespace qwalk
