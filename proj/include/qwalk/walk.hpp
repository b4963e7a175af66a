#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

// coin labels; storage order everywhere is [down, up]
inline constexpr int down = 0;
inline constexpr int up = 1;

using Spinor = std::array<cplx, 2>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

Spinor coin_basis(int c);

// z^n by squaring
cplx ipow(cplx z, int n);

struct WalkerWave {
    long origin = 0;
    int steps = 0;
    std::vector<cplx> amp; // index (o + steps) * 2 + c

    cplx at(long offset, int c) const;
    double norm2() const;
    double prob(long offset) const { return std::norm(at(offset, 0)) + std::norm(at(offset, 1)); }
    long width() const { return 2L * steps + 1; }
};

WalkerWave initial_wave(const Spinor& coin, long origin = 0);

// one application of shift * (I x H); step() fans out with OpenMP,
// step_serial() is the plain loop kept for testing/benchmarks
WalkerWave step(const WalkerWave& w);
WalkerWave step_serial(const WalkerWave& w);

// throws std::invalid_argument for coin norm off by more than 1e-9
WalkerWave evolve(const Spinor& coin, int t, long origin = 0);
WalkerWave evolve(int c, int t, long origin = 0);

// momentum picture
Mat2 walk_matrix(double K);

struct CoinEigenSystem {
    double K = 0;
    std::array<cplx, 2> lambda;
    std::array<Spinor, 2> vec; // d1, d2 as spinors in storage order
};

CoinEigenSystem coin_eigensystem(double K);

// <x, c| U^t |0, coin> by adaptive quadrature over the Brillouin zone
cplx evolve_via_momentum(const Spinor& coin, int t, long x, int c, double tol = 1e-10);

} // namespace qwalk
