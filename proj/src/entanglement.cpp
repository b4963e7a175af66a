#include "qwalk/entanglement.hpp"
#include "qwalk/symmetry.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {
double binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return std::round(r);
}

// coefficients of sum_w r^w sqrt(C(m,w)) |w>, normalized
Eigen::VectorXd fock_vector(int m, double r)
{
    Eigen::VectorXd v(m + 1);
    for (int w = 0; w <= m; ++w)
        v(w) = std::pow(r, w) * std::sqrt(binom(m, w));
    return v;
}
} // namespace

double entropy_bits(const std::vector<double>& nu)
{
    double s = 0;
    for (double v : nu)
        if (v > 0)
            s -= v * std::log2(v);
    return s;
}

SchmidtData schmidt(const CoinVector& a, const std::vector<int>& cut)
{
    const int n = a.n;
    std::vector<int> c = cut;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty() || static_cast<int>(c.size()) >= n)
        throw std::invalid_argument("cut must be a proper non-empty subset");
    for (int i : c)
        if (i < 1 || i > n)
            throw std::invalid_argument("cut label outside 1..n");
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(c.begin(), c.end(), i))
            rest.push_back(i);

    const long ra = 1L << c.size(), rb = 1L << rest.size();
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(ra, rb);
    for (unsigned long x = 0; x < a.dim(); ++x) {
        long r = 0, q = 0;
        for (int i : c)
            r = (r << 1) | a.coin_of(x, i);
        for (int i : rest)
            q = (q << 1) | a.coin_of(x, i);
        psi(r, q) = a.amp[x];
    }
    // the smaller Gram matrix carries the same nonzero spectrum
    Eigen::MatrixXcd rho = ra <= rb ? Eigen::MatrixXcd(psi * psi.adjoint()) : Eigen::MatrixXcd(psi.adjoint() * psi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    SchmidtData out;
    out.cut = c;
    for (long i = es.eigenvalues().size() - 1; i >= 0; --i)
        out.nu.push_back(std::max(0.0, es.eigenvalues()(i)));
    out.entropy = entropy_bits(out.nu);
    return out;
}

int nu_exponent(int n, bool odd_k) { return odd_k ? n : n - 2; }

double RootTwo::value() const { return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(2.0); }

RootTwo pow(RootTwo x, int e)
{
    if (e < 0)
        throw std::invalid_argument("negative power");
    RootTwo r{1, 0};
    for (int i = 0; i < e; ++i)
        r = r * x;
    return r;
}

std::pair<double, double> nu_closed_form(int n, bool odd_k)
{
    if (n < 2)
        throw std::invalid_argument("need n >= 2");
    // (3+2sqrt2)^e = A + B sqrt2 exactly, so nu2 = 1 / (1 + A + B sqrt2)
    const int e = nu_exponent(n, odd_k);
    const RootTwo big = pow({3, 2}, e);
    const double inv = 1.0 / (1.0 + static_cast<double>(big.a) + static_cast<double>(big.b) * std::sqrt(2.0));
    return {1.0 - inv, inv};
}

RootTwo weighted_binomial_sum(int m)
{
    RootTwo s{0, 0};
    const RootTwo sq = pow({1, 1}, 2); // 3 + 2sqrt2
    for (int w = 0; w <= m; ++w)
        s = s + pow(sq, w) * static_cast<long long>(binom(m, w));
    return s;
}

RootTwo normalization_power(int m) { return pow({4, 2}, m); }

FockForm build_eigenstate_fock(int n, unsigned long k)
{
    if (n < 2)
        throw std::invalid_argument("need n >= 2");
    Partition part = partition(n, k);
    FockForm f;
    f.n = n;
    f.k = k;
    f.side_a = part.s_down;
    f.side_b = part.s_up;
    const int m = part.n_down(), W = part.n_up();
    // P_k entry for w0 ups on A and w1 ups on B: (-1)^w1 F(W - w1 + w0 + delta),
    // F(a) = (r^a - s^a) / (2 sqrt2) with r = 1+sqrt2, s = 1-sqrt2
    const int delta = (k & 1UL) ? 0 : -1;
    const double r = 1 + std::sqrt(2.0), s = 1 - std::sqrt(2.0);
    f.a1 = fock_vector(m, r);
    f.a2 = fock_vector(m, s);
    Eigen::VectorXd b1 = fock_vector(W, -1 / r), b2 = fock_vector(W, -1 / s);
    double c1 = std::pow(r, W + delta) / (2 * std::sqrt(2.0)) * f.a1.norm() * b1.norm();
    double c2 = -std::pow(s, W + delta) / (2 * std::sqrt(2.0)) * f.a2.norm() * b2.norm();
    f.a1.normalize();
    f.a2.normalize();
    if (W == 0) {
        // both terms live on A alone
        Eigen::VectorXd v = c1 * f.a1 + c2 * f.a2;
        f.c1 = 1;
        f.c2 = 0;
        f.a1 = v.normalized();
        f.a2 = Eigen::VectorXd();
        return f;
    }
    const double norm = std::hypot(c1, c2); // the two products are orthogonal
    f.c1 = c1 / norm;
    f.c2 = c2 / norm;
    f.b1 = b1.normalized();
    f.b2 = b2.normalized();
    return f;
}

Eigen::VectorXd FockForm::expand() const
{
    Eigen::VectorXd out(1L << n);
    for (unsigned long x = 0; x < (1UL << n); ++x) {
        int wa = 0, wb = 0;
        for (int i : side_a)
            wa += (x >> (n - i)) & 1UL;
        for (int i : side_b)
            wb += (x >> (n - i)) & 1UL;
        const double sa = std::sqrt(binom(static_cast<int>(side_a.size()), wa));
        const double sb = std::sqrt(binom(static_cast<int>(side_b.size()), wb));
        if (rank() == 1) {
            out(x) = c1 * a1(wa) / sa;
            continue;
        }
        out(x) = (c1 * a1(wa) * b1(wb) + c2 * a2(wa) * b2(wb)) / (sa * sb);
    }
    return out;
}

} // namespace qwalk
