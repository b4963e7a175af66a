#include "qwalk/symmetry.hpp"
#include "qwalk/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwalk {

namespace {
void check_pair(int n, int i, int j)
{
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("transposition needs two distinct particles in 1..n");
}

unsigned long swap_bits(unsigned long x, int bi, int bj)
{
    const unsigned long a = (x >> bi) & 1UL, b = (x >> bj) & 1UL;
    if (a == b)
        return x;
    return x ^ ((1UL << bi) | (1UL << bj));
}
} // namespace

bool Partition::same_side(int i, int j) const
{
    auto in_up = [&](int q) { return std::find(s_up.begin(), s_up.end(), q) != s_up.end(); };
    return in_up(i) == in_up(j);
}

Partition partition(int n, unsigned long k)
{
    if (n < 1 || n > 24 || k >= (1UL << n))
        throw std::invalid_argument("eigenstate index out of range");
    Partition p;
    p.n = n;
    p.k = k;
    const unsigned long ke = k & ~1UL;
    for (int i = 1; i <= n; ++i)
        ((ke >> (n - i)) & 1UL ? p.s_up : p.s_down).push_back(i);
    const long u = p.n_up(), d = p.n_down();
    p.p = u * (u - 1) / 2 + d * (d - 1) / 2;
    return p;
}

std::vector<long long> apply_transposition(const std::vector<long long>& v, int n, int i, int j)
{
    check_pair(n, i, j);
    if (v.size() != (1UL << n))
        throw std::invalid_argument("vector length must be 2^n");
    std::vector<long long> out(v.size());
    for (unsigned long x = 0; x < v.size(); ++x)
        out[swap_bits(x, n - i, n - j)] = v[x];
    return out;
}

CoinVector apply_transposition(const CoinVector& a, int i, int j)
{
    check_pair(a.n, i, j);
    std::vector<cplx> out(a.dim());
    for (unsigned long x = 0; x < a.dim(); ++x)
        out[swap_bits(x, a.n - i, a.n - j)] = a.amp[x];
    return CoinVector(a.n, std::move(out));
}

long count_preserving_swaps(int n, unsigned long k)
{
    const auto v = eigenvector_P(n, k);
    long c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            c += apply_transposition(v, n, i, j) == v;
    return c;
}

bool swap_preserves(int n, unsigned long k, int i, int j)
{
    check_pair(n, i, j);
    const unsigned long ke = k & ~1UL;
    return ((ke >> (n - i)) & 1UL) == ((ke >> (n - j)) & 1UL);
}

std::vector<int> relabeling(int n, unsigned long k, unsigned long target)
{
    Partition a = partition(n, k), b = partition(n, target);
    if (a.n_up() != b.n_up())
        throw std::invalid_argument("relabeling needs equal Hamming weight");
    std::vector<int> perm(n + 1, 0); // perm[old] = new, 1-based
    for (size_t x = 0; x < a.s_up.size(); ++x)
        perm[a.s_up[x]] = b.s_up[x];
    for (size_t x = 0; x < a.s_down.size(); ++x)
        perm[a.s_down[x]] = b.s_down[x];
    return perm;
}

CoinVector relabel(const CoinVector& a, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != a.n + 1)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<cplx> out(a.dim());
    for (unsigned long x = 0; x < a.dim(); ++x) {
        unsigned long y = 0;
        for (int i = 1; i <= a.n; ++i)
            if (a.coin_of(x, i))
                y |= 1UL << (a.n - perm[i]);
        out[y] = a.amp[x];
    }
    return CoinVector(a.n, std::move(out));
}

} // namespace qwalk
