#include "qwalk/integrals.hpp"
#include "qwalk/quadrature.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace qwalk::integrals {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;
const cplx I(0, 1);

// cos(pi x / 2) on integers, exactly
double cos_half_pi(long x)
{
    switch (((x % 4) + 4) % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
    }
}

// (-1)^s with up = 1
double coin_sign(int s) { return s == up ? -1.0 : 1.0; }

Mat2 mul(const Mat2& a, const Mat2& b)
{
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

// lambda, projectors and their K-derivatives; T = double on the zone,
// cplx for the analytic continuation used by the stationary-phase sums
template <class T>
ProjectorJet jet_at(T K)
{
    ProjectorJet j;
    const T r = std::sqrt(3.0 + std::cos(2.0 * K));
    const T rp = -std::sin(2.0 * K) / r;
    const T rpp = (-2.0 * std::cos(2.0 * K) - rp * rp) / r;
    const T sn = std::sin(K) / sqrt2, cs = std::cos(K) / sqrt2;
    j.lam = {-r / 2.0 - I * sn, r / 2.0 - I * sn};
    j.dlam = {-rp / 2.0 - I * cs, rp / 2.0 - I * cs};
    j.d2lam = {-rpp / 2.0 + I * sn, rpp / 2.0 + I * sn};

    // rows: e^{-iK} H for up, e^{iK} H for down
    const cplx eu = std::exp(-I * K) / sqrt2, ed = std::exp(I * K) / sqrt2;
    Mat2 U, dU, d2U;
    U[up] = {eu, eu};
    U[down] = {-ed, ed};
    for (int c = 0; c < 2; ++c) {
        // rows pick up -i (up) or +i (down) per K-derivative
        const cplx k = c == up ? -I : I;
        dU[c][0] = k * U[c][0];
        dU[c][1] = k * U[c][1];
        d2U[c][0] = -U[c][0];
        d2U[c][1] = -U[c][1];
    }
    for (int d = 0; d < 2; ++d) {
        const int o = 1 - d;
        const cplx den = j.lam[d] - j.lam[o], dden = j.dlam[d] - j.dlam[o], d2den = j.d2lam[d] - j.d2lam[o];
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const double id = a == b ? 1.0 : 0.0;
                const cplx N = U[a][b] - j.lam[o] * id;
                const cplx dN = dU[a][b] - j.dlam[o] * id;
                const cplx d2N = d2U[a][b] - j.d2lam[o] * id;
                const cplx P = N / den;
                const cplx dP = (dN - P * dden) / den;
                j.P[d][a][b] = P;
                j.dP[d][a][b] = dP;
                j.d2P[d][a][b] = (d2N - 2.0 * dP * dden - P * d2den) / den;
            }
    }
    return j;
}

cplx phase(double K, long dx) { return std::polar(1.0, K * static_cast<double>(dx)); }

struct Lam {
    std::array<cplx, 2> v, d;
};

Lam lam_only(double K)
{
    const double r = std::sqrt(3 + std::cos(2 * K));
    const double rp = -std::sin(2 * K) / r;
    const double s = std::sin(K) / sqrt2, c = std::cos(K) / sqrt2;
    return {{cplx(-r / 2, -s), cplx(r / 2, -s)}, {cplx(-rp / 2, -c), cplx(rp / 2, -c)}};
}

// d/dK of the phase of conj(lam_{other}) * lam_d
double phase_slope(double K, int d)
{
    Lam l = lam_only(K);
    const int o = 1 - d;
    return std::imag(l.d[d] / l.v[d] + std::conj(l.d[o]) / std::conj(l.v[o]));
}

template <class F>
auto d1(F&& f, double x, double h)
{
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// cross-branch amplitude without the oscillating factor. On the zone
// conj(l'/l) = -l'/l, which keeps this analytic in K.
cplx cross_amp(const ProjectorJet& j, int d, long xp, int sp, int s, int t, bool with_growth)
{
    const int o = 1 - d;
    const cplx m1 = mul(j.dP[o], j.P[d])[sp][s];
    if (!with_growth)
        return m1;
    const cplx m2 = mul(j.d2P[o], j.P[d])[sp][s];
    const cplx g = -j.dlam[o] / j.lam[o];
    return 2.0 * I * static_cast<double>(xp) * m1 + m2 + 2.0 * t * g * m1;
}

cplx cross_factor(const ProjectorJet& j, int d, int t)
{
    return ipow(std::conj(j.lam[1 - d]) * j.lam[d], t);
}

// Taylor coefficients c_0..c_deg of f about K0 from a Cauchy circle
template <class F>
std::vector<cplx> taylor(F&& f, double K0, int deg)
{
    constexpr int nodes = 64;
    constexpr double rho = 0.25; // branch points of lambda sit at |Im K| ~ 0.88
    std::vector<cplx> vals(nodes), c(deg + 1);
    for (int q = 0; q < nodes; ++q)
        vals[q] = f(K0 + std::polar(rho, 2 * pi * q / nodes));
    for (int n = 0; n <= deg; ++n) {
        cplx acc = 0;
        for (int q = 0; q < nodes; ++q)
            acc += vals[q] * std::polar(1.0, -2 * pi * q * n / nodes);
        c[n] = acc / (nodes * std::pow(rho, n));
    }
    return c;
}

// highest power of (K - K0) kept in the local expansion
constexpr int sp_degree = 18;

cplx stationary_sum(long xp, long x, int sp, int s, int t, bool with_growth)
{
    const long dx = xp - x;
    const double D = static_cast<double>(dx), tt = t;
    cplx total = 0;
    for (int d = 0; d < 2; ++d) {
        auto F = [&](double K) { return tt * phase_slope(K, d) + D; };
        auto dF = [&](double K) { return tt * d1([&](double k) { return phase_slope(k, d); }, K, 1e-4); };

        const int grid = 2048;
        std::vector<double> roots;
        for (int g = 0; g < grid; ++g) {
            double a = -pi + 2 * pi * g / grid, b = -pi + 2 * pi * (g + 1) / grid;
            double fa = F(a), fb = F(b);
            if (fa == 0) {
                roots.push_back(a);
                continue;
            }
            if (fa * fb > 0 || fb == 0)
                continue;
            boost::uintmax_t iters = 100;
            auto br = boost::math::tools::toms748_solve(F, a, b, fa, fb,
                boost::math::tools::eps_tolerance<double>(52), iters);
            double K0 = 0.5 * (br.first + br.second);
            for (int it = 0; it < 3; ++it) // polish
                K0 -= F(K0) / dF(K0);
            roots.push_back(K0);
        }

        const int o = 1 - d;
        for (double K0 : roots) {
            const ProjectorJet j0 = jet_at(K0);
            const cplx z0 = j0.lam[d] / j0.lam[o];
            // exponent minus its value at K0, and the amplitude
            auto expo = [&](cplx K) {
                ProjectorJet j = jet_at(K);
                return tt * std::log(j.lam[d] / j.lam[o] / z0) + I * D * (K - K0);
            };
            auto amp = [&](cplx K) { return cross_amp(jet_at(K), d, xp, sp, s, t, with_growth); };
            const std::vector<cplx> S = taylor(expo, K0, sp_degree), g = taylor(amp, K0, sp_degree);

            // exp of the cubic-and-up remainder as a power series
            std::vector<cplx> E(sp_degree + 1, 0.0);
            E[0] = 1;
            for (int n = 1; n <= sp_degree; ++n) {
                cplx acc = 0;
                for (int k = 3; k <= n; ++k)
                    acc += double(k) * S[k] * E[n - k];
                E[n] = acc / double(n);
            }
            const cplx h = -2.0 * S[2];
            cplx sum = 0, moment = 1; // (2m-1)!! / h^m
            for (int m = 0; 2 * m <= sp_degree; ++m) {
                cplx G = 0;
                for (int k = 0; k <= 2 * m; ++k)
                    G += g[k] * E[2 * m - k];
                sum += G * moment;
                moment *= double(2 * m + 1) / h;
            }
            total += std::sqrt(2 * pi / h) * ipow(z0, t) * phase(K0, dx) * sum;
        }
    }
    return total;
}

} // namespace

ProjectorJet projector_jet(double K) { return jet_at(K); }

// ---- closed forms ------------------------------------------------------

double f(long x)
{
    return sqrt2 * pi * std::pow(sqrt2 - 1, std::labs(x)) * cos_half_pi(x);
}

double a(long x)
{
    const double ax = static_cast<double>(std::labs(x));
    return -pi / 64 * std::pow(sqrt2 - 1, ax) * (3 * sqrt2 + 2 * ax) * cos_half_pi(x);
}

cplx A2(long dx, int sp, int s)
{
    if (sp != s)
        return 0;
    return dx == 0 ? (sqrt2 - 2) * pi : f(dx);
}

cplx B(long dx, int sp, int s)
{
    if (sp == s)
        return coin_sign(s) * I * A2(dx, sp, s);
    return 0.5 * I * (f(dx) + f(dx - static_cast<long>(coin_sign(s)) * 2));
}

cplx A1(long xp, long x, int sp, int s)
{
    const long D = xp - x;
    const double X = static_cast<double>(xp);
    if (sp == s) {
        double base = 16 * X * (a(D - 2) + a(D + 2)) + 28 * X * a(D) + 2 * X * (a(D + 4) + a(D - 4)) +
                      8 * (a(D + 2) - a(D - 2));
        return s == up ? base : -base;
    }
    if (sp == up) // s = down
        return (4 * X - 4) * a(D + 2) + (28 * X - 8) * a(D) + (28 * X - 20) * a(D - 2) + 4 * X * a(D - 4);
    return (4 * X + 4) * a(D - 2) + (28 * X + 8) * a(D) + (28 * X + 20) * a(D + 2) + 4 * X * a(D + 4);
}

cplx AC(long xp, long x, int sp, int s)
{
    const long D = xp - x;
    const double X = static_cast<double>(xp);
    double quad_part = 0;
    if (sp == s)
        quad_part = X * X * (a(D - 4) + 12 * a(D - 2) + 38 * a(D) + 12 * a(D + 2) + a(D + 4));
    const double sg = (sp == up && s == up) ? 1.0 : -1.0;
    const double lin = -4 * sg * X * (a(D - 2) + 6 * a(D) + a(D + 2));
    double c;
    if (sp == up && s == up)
        c = -4 * a(D - 2) + 16 * a(D) + 4 * a(D + 2);
    else if (sp == down && s == down)
        c = 4 * a(D - 2) + 16 * a(D) - 4 * a(D + 2);
    else
        c = 4 * a(D - 2) - 4 * a(D + 2);
    return quad_part + lin + c;
}

cplx AC_as_printed(long xp, long x)
{
    const long D = xp - x;
    const double X = static_cast<double>(xp);
    return X * X * a(D - 4) - 4 * (1 + X - 3 * X * X) * a(D - 2) + (16 - 24 * X + 38 * X * X) * a(D) +
           (4 - 4 * X + 12 * X * X) * a(D + 2) + X * X * a(D + 4);
}

cplx B1(long xp, long x, int sp, int s)
{
    const long D = xp - x;
    const cplx v = I * pi * std::pow(sqrt2 - 1, std::labs(D)) * cos_half_pi(D) / sqrt2;
    const cplx diag = D == 0 ? 2.0 * I * pi * static_cast<double>(x) : cplx(0);
    if (sp == s)
        return s == up ? diag - v : diag + v;
    return v;
}

cplx Ao(long xp, long x, int sp, int s, int t) { return stationary_sum(xp, x, sp, s, t, true); }
cplx Bo(long xp, long x, int sp, int s, int t) { return stationary_sum(xp, x, sp, s, t, false); }

cplx x2_element(long xp, long x, int sp, int s, int t)
{
    const double tt = t;
    return -(tt * tt * A2(xp - x, sp, s) + tt * A1(xp, x, sp, s) + AC(xp, x, sp, s) + Ao(xp, x, sp, s, t)) /
           (2 * pi);
}

cplx x_element(long xp, long x, int sp, int s, int t)
{
    const double tt = t;
    return -I * (tt * B(xp - x, sp, s) + B1(xp, x, sp, s) + Bo(xp, x, sp, s, t)) / (2 * pi);
}

// ---- defining integrals --------------------------------------------------

namespace quad {

double f(long x)
{
    auto g = [x](double K) {
        double c = std::cos(K);
        return phase(K, x) / (1 + c * c);
    };
    return integrate_bz(g).real();
}

double a(long x)
{
    auto g = [x](double K) {
        double c = std::cos(K), q = 1 + c * c;
        return phase(K, x) / (q * q);
    };
    return -integrate_bz(g).real() / 16;
}

cplx A2(long dx, int sp, int s)
{
    return integrate_bz([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d) {
            cplx g = std::conj(j.dlam[d]) / std::conj(j.lam[d]);
            acc += j.P[d][sp][s] * g * g;
        }
        return phase(K, dx) * acc;
    });
}

cplx B(long dx, int sp, int s)
{
    return integrate_bz([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d)
            acc += j.P[d][sp][s] * std::conj(j.dlam[d]) / std::conj(j.lam[d]);
        return phase(K, dx) * acc;
    });
}

cplx A1(long xp, long x, int sp, int s)
{
    return integrate_bz([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d) {
            cplx g = std::conj(j.dlam[d]) / std::conj(j.lam[d]);
            cplx h = std::conj(j.d2lam[d]) / std::conj(j.lam[d]);
            cplx lin = I * static_cast<double>(xp) * j.P[d][sp][s] + mul(j.dP[d], j.P[d])[sp][s];
            acc += 2.0 * g * lin + j.P[d][sp][s] * (h - g * g);
        }
        return phase(K, xp - x) * acc;
    });
}

cplx AC(long xp, long x, int sp, int s)
{
    const double X = static_cast<double>(xp);
    return integrate_bz([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d)
            acc += -X * X * j.P[d][sp][s] + 2.0 * I * X * mul(j.dP[d], j.P[d])[sp][s] +
                   mul(j.d2P[d], j.P[d])[sp][s];
        return phase(K, xp - x) * acc;
    });
}

cplx B1(long xp, long x, int sp, int s)
{
    return integrate_bz([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d)
            acc += I * static_cast<double>(xp) * j.P[d][sp][s] + mul(j.dP[d], j.P[d])[sp][s];
        return phase(K, xp - x) * acc;
    });
}

static int default_points(long xp, long x, int t)
{
    return 8 * (t + static_cast<int>(std::labs(xp - x)) + 32);
}

cplx Ao(long xp, long x, int sp, int s, int t, int npts)
{
    if (npts <= 0)
        npts = default_points(xp, x, t);
    return integrate_periodic([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d)
            acc += cross_factor(j, d, t) * cross_amp(j, d, xp, sp, s, t, true);
        return phase(K, xp - x) * acc;
    }, npts);
}

cplx Bo(long xp, long x, int sp, int s, int t, int npts)
{
    if (npts <= 0)
        npts = default_points(xp, x, t);
    return integrate_periodic([=](double K) {
        ProjectorJet j = projector_jet(K);
        cplx acc = 0;
        for (int d = 0; d < 2; ++d)
            acc += cross_factor(j, d, t) * cross_amp(j, d, xp, sp, s, t, false);
        return phase(K, xp - x) * acc;
    }, npts);
}

} // namespace quad
} // namespace qwalk::integrals
