#include "qwalk/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {
long long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

void check_n(int n, int lo, int hi)
{
    if (n < lo || n > hi)
        throw std::invalid_argument("particle count " + std::to_string(n) + " outside " + std::to_string(lo) +
                                    ".." + std::to_string(hi));
}
} // namespace

int hamming_weight(unsigned long i) { return std::popcount(i); }
int hamming_distance(unsigned long i, unsigned long j) { return std::popcount(i ^ j); }
int common_ones(unsigned long i, unsigned long j) { return std::popcount(i & j); }

double ballistic_constant() { return 1 - 1 / std::sqrt(2.0); }

long long pell(int alpha)
{
    if (alpha < -1)
        throw std::invalid_argument("Pell index below -1");
    long long prev = 1, cur = 0; // F(-1), F(0)
    for (int i = 0; i < alpha; ++i) {
        long long nxt = 2 * cur + prev;
        prev = cur;
        cur = nxt;
    }
    return alpha == -1 ? 1 : cur;
}

IntMat2 pell_power(int alpha)
{
    if (alpha < 0)
        throw std::invalid_argument("negative matrix power");
    return {{{pell(alpha - 1), pell(alpha)}, {pell(alpha), pell(alpha + 1)}}};
}

QuadraticForm::QuadraticForm(int n) : n_(n) { check_n(n, 1, max_n); }

QuadraticForm build_M(int n) { return QuadraticForm(n); }

double QuadraticForm::entry(unsigned long i, unsigned long j) const
{
    const double a = ballistic_constant(), n = n_;
    const int d = hamming_distance(i, j);
    if (d == 0) {
        const double w = hamming_weight(i);
        return (n - 1) * a + (n - (2 * w - n) * (2 * w - n)) / n * a * a;
    }
    if (d == 1) {
        const int w = std::min(hamming_weight(i), hamming_weight(j));
        return 2 / n * a * a * (n - 1 - 2 * w);
    }
    if (d == 2)
        return -2 / n * a * a;
    return 0;
}

Eigen::VectorXcd QuadraticForm::apply(const Eigen::VectorXcd& v) const
{
    if (v.size() != dim())
        throw std::invalid_argument("vector length does not match 2^n");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim());
#pragma omp parallel for schedule(static) if (n_ > 8)
    for (long i = 0; i < dim(); ++i) {
        const unsigned long u = static_cast<unsigned long>(i);
        cplx acc = entry(u, u) * v(i);
        for (int b = 0; b < n_; ++b) {
            const unsigned long j = u ^ (1UL << b);
            acc += entry(u, j) * v(static_cast<long>(j));
            for (int c = b + 1; c < n_; ++c) {
                const unsigned long k = j ^ (1UL << c);
                acc += entry(u, k) * v(static_cast<long>(k));
            }
        }
        out(i) = acc;
    }
    return out;
}

Eigen::MatrixXd QuadraticForm::dense() const
{
    check_n(n_, 1, max_dense_n);
    Eigen::MatrixXd m(dim(), dim());
    for (long i = 0; i < dim(); ++i)
        for (long j = 0; j < dim(); ++j)
            m(i, j) = entry(i, j);
    return m;
}

double eta(int n, unsigned long k)
{
    const double a = ballistic_constant();
    const double w = hamming_weight(k & ~1UL);
    return a * a * (8 * w * (n - w) / n + (n - 1) * std::sqrt(2.0));
}

long mu(int n, unsigned long k)
{
    const long w = hamming_weight(k & ~1UL);
    return 4 * w * (n - w);
}

double eta_min(int n) { return ballistic_constant() * ballistic_constant() * (n - 1) * std::sqrt(2.0); }

double eta_max(int n)
{
    const double a2 = ballistic_constant() * ballistic_constant();
    const double top = (n % 2 == 0) ? 2.0 * n : 2.0 * n - 2.0 / n;
    return a2 * ((n - 1) * std::sqrt(2.0) + top);
}

std::vector<SpectralLevel> spectrum_levels(int n)
{
    if (n < 2)
        throw std::invalid_argument("spectrum needs n >= 2");
    const double a2 = ballistic_constant() * ballistic_constant();
    std::vector<SpectralLevel> out;
    // even k has its last bit clear, so w runs over 0..n-1
    for (int w = 0; 2 * w <= n; ++w) {
        SpectralLevel l;
        l.w = w;
        l.mu = 4L * w * (n - w);
        l.eta = a2 * (2.0 * l.mu / n + (n - 1) * std::sqrt(2.0));
        long long deg = 2 * binom(n - 1, w);
        if (n - w != w)
            deg += 2 * binom(n - 1, n - w);
        l.degeneracy = deg;
        if (deg > 0)
            out.push_back(l);
    }
    return out;
}

SpectralTable analytic_spectrum(int n)
{
    check_n(n, 2, QuadraticForm::max_n);
    SpectralTable tab;
    tab.n = n;
    tab.levels = spectrum_levels(n);
    std::map<int, long> deg;
    for (auto& l : tab.levels) {
        deg[l.w] = l.degeneracy;
        deg[n - l.w] = l.degeneracy;
    }
    for (unsigned long k = 0; k < (1UL << n); k += 2) {
        SpectralEntry e;
        e.k = k;
        e.weight = hamming_weight(k);
        e.eta = eta(n, k);
        e.mu = mu(n, k);
        e.degeneracy = deg[e.weight];
        tab.entries.push_back(e);
    }
    return tab;
}

std::vector<long long> eigenvector_P(int n, unsigned long k)
{
    check_n(n, 1, 20);
    if (k >= (1UL << n))
        throw std::invalid_argument("eigenvector index out of range");
    const unsigned long ke = k & ~1UL;
    const int col = static_cast<int>(k & 1UL);
    std::vector<long long> v(1UL << n);
    for (unsigned long i = 0; i < (1UL << n); i += 2) {
        IntMat2 blk = pell_power(hamming_distance(i, ke));
        const long long sg = (common_ones(i, ke) % 2) ? -1 : 1;
        v[i] = sg * blk[0][col];
        v[i + 1] = sg * blk[1][col];
    }
    return v;
}

CoinVector eigenstate(int n, unsigned long k)
{
    auto p = eigenvector_P(n, k);
    std::vector<double> d(p.begin(), p.end());
    return CoinVector::from_real(n, d);
}

double c2(const CoinVector& a)
{
    QuadraticForm m(a.n);
    Eigen::Map<const Eigen::VectorXcd> v(a.amp.data(), static_cast<long>(a.amp.size()));
    cplx r = v.dot(m.apply(v)); // dot conjugates the left side
    if (std::abs(r.imag()) > 1e-12 * std::max(1.0, std::abs(r.real())))
        throw std::logic_error("quadratic form returned a complex value");
    return r.real();
}

Eigen::VectorXd dense_spectrum(int n)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_M(n).dense(), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

} // namespace qwalk
