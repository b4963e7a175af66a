#include "qwalk/walk.hpp"
#include "qwalk/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {
const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

// grids wider than this get split across threads
constexpr long par_threshold = 1 << 14;

WalkerWave next_grid(const WalkerWave& w)
{
    WalkerWave out;
    out.origin = w.origin;
    out.steps = w.steps + 1;
    out.amp.assign(2 * out.width(), cplx(0));
    return out;
}

inline void gather(const WalkerWave& w, WalkerWave& out, long o)
{
    // up arrives from the left, down from the right
    cplx lu = w.at(o - 1, up), ld = w.at(o - 1, down);
    cplx ru = w.at(o + 1, up), rd = w.at(o + 1, down);
    size_t base = static_cast<size_t>(o + out.steps) * 2;
    out.amp[base + up] = (lu + ld) * inv_sqrt2;
    out.amp[base + down] = (ru - rd) * inv_sqrt2;
}
} // namespace

Spinor coin_basis(int c)
{
    if (c != up && c != down)
        throw std::invalid_argument("coin label must be 0 (down) or 1 (up)");
    Spinor s{0, 0};
    s[c] = 1;
    return s;
}

cplx ipow(cplx z, int n)
{
    if (n < 0)
        return 1.0 / ipow(z, -n);
    cplx r = 1;
    while (n) {
        if (n & 1)
            r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

cplx WalkerWave::at(long offset, int c) const
{
    if (offset < -steps || offset > steps)
        return 0;
    return amp[static_cast<size_t>(offset + steps) * 2 + c];
}

double WalkerWave::norm2() const
{
    double s = 0;
    for (auto& a : amp)
        s += std::norm(a);
    return s;
}

WalkerWave initial_wave(const Spinor& coin, long origin)
{
    double nrm = std::norm(coin[0]) + std::norm(coin[1]);
    if (std::abs(nrm - 1) > 1e-9)
        throw std::invalid_argument("coin vector is not normalized");
    WalkerWave w;
    w.origin = origin;
    w.amp = {coin[0], coin[1]};
    return w;
}

WalkerWave step_serial(const WalkerWave& w)
{
    WalkerWave out = next_grid(w);
    for (long o = -out.steps; o <= out.steps; ++o)
        gather(w, out, o);
    return out;
}

WalkerWave step(const WalkerWave& w)
{
    WalkerWave out = next_grid(w);
    const long s = out.steps;
#pragma omp parallel for schedule(static) if (2 * s + 1 > par_threshold)
    for (long o = -s; o <= s; ++o)
        gather(w, out, o);
    return out;
}

WalkerWave evolve(const Spinor& coin, int t, long origin)
{
    if (t < 0)
        throw std::invalid_argument("negative step count");
    WalkerWave w = initial_wave(coin, origin);
    for (int i = 0; i < t; ++i)
        w = step(w);
    return w;
}

WalkerWave evolve(int c, int t, long origin) { return evolve(coin_basis(c), t, origin); }

Mat2 walk_matrix(double K)
{
    // diag(e^{-iK} on up, e^{iK} on down) * Hadamard, storage order [down, up]
    const cplx em = std::polar(1.0, -K), ep = std::polar(1.0, K);
    Mat2 u;
    u[down][down] = -ep * inv_sqrt2;
    u[down][up] = ep * inv_sqrt2;
    u[up][down] = em * inv_sqrt2;
    u[up][up] = em * inv_sqrt2;
    return u;
}

CoinEigenSystem coin_eigensystem(double K)
{
    const double r = std::sqrt(3 + std::cos(2 * K));
    const double s = std::sin(K) * inv_sqrt2;
    CoinEigenSystem e;
    e.K = K;
    e.lambda = {cplx(-r / 2, -s), cplx(r / 2, -s)};

    auto N = [](double k) {
        double c = std::cos(k), q = 1 + c * c;
        return q + c * std::sqrt(q);
    };
    const double nk = std::sqrt(2 * N(K)), nq = std::sqrt(2 * N(std::numbers::pi - K));
    const cplx em = std::polar(1.0, -K);
    e.vec[0][up] = -em / nk;
    e.vec[0][down] = 1.0 / nq;
    e.vec[1][up] = em / nq;
    e.vec[1][down] = 1.0 / nk;
    return e;
}

cplx evolve_via_momentum(const Spinor& coin, int t, long x, int c, double tol)
{
    if (t < 0)
        throw std::invalid_argument("negative step count");
    auto f = [&](double K) {
        CoinEigenSystem e = coin_eigensystem(K);
        cplx acc = 0;
        for (int j = 0; j < 2; ++j) {
            cplx ov = std::conj(e.vec[j][0]) * coin[0] + std::conj(e.vec[j][1]) * coin[1];
            acc += ipow(e.lambda[j], t) * e.vec[j][c] * ov;
        }
        return std::polar(1.0, K * static_cast<double>(x)) * acc;
    };
    return integrate_bz(f, tol * 2 * std::numbers::pi) / (2 * std::numbers::pi);
}

} // namespace qwalk
