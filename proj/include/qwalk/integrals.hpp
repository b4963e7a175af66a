#pragma once

#include "qwalk/walk.hpp"

#include <array>

namespace qwalk {

// Brillouin-zone integrals behind the long-time moments of a single walker.
// Coin arguments use the walk labels (up = 1, down = 0). Position arguments
// are lattice integers: x' is the bra site, x the ket site.
namespace integrals {

double f(long x);
double a(long x);

cplx A2(long dx, int sp, int s);
cplx B(long dx, int sp, int s);
cplx A1(long xp, long x, int sp, int s);
cplx AC(long xp, long x, int sp, int s);
cplx B1(long xp, long x, int sp, int s);

// AC exactly as printed in the source derivation: coin-blind, right for
// (up, up) only. Kept so the discrepancy stays testable.
cplx AC_as_printed(long xp, long x);

// oscillating cross-branch pieces: the stationary-phase series, carried to
// degree 18 in K - K0, about every real K0 where t*phase'(K) + (x'-x) = 0
cplx Ao(long xp, long x, int sp, int s, int t);
cplx Bo(long xp, long x, int sp, int s, int t);

// exact-in-t expansions of <x' s'|(U^t)^dag x^2 U^t|x s> and of the x element
cplx x2_element(long xp, long x, int sp, int s, int t);
cplx x_element(long xp, long x, int sp, int s, int t);

// the defining K-integrals, evaluated numerically; these are the oracles
namespace quad {
double f(long x);
double a(long x);
cplx A2(long dx, int sp, int s);
cplx B(long dx, int sp, int s);
cplx A1(long xp, long x, int sp, int s);
cplx AC(long xp, long x, int sp, int s);
cplx B1(long xp, long x, int sp, int s);
// periodic trapezoid with a bandwidth-sized grid; npts <= 0 picks one
cplx Ao(long xp, long x, int sp, int s, int t, int npts = 0);
cplx Bo(long xp, long x, int sp, int s, int t, int npts = 0);
} // namespace quad

// analytic eigen-projectors of the momentum walk matrix and their first
// two K-derivatives, per branch d = 0 (lambda_1), 1 (lambda_2)
struct ProjectorJet {
    std::array<cplx, 2> lam, dlam, d2lam;
    std::array<Mat2, 2> P, dP, d2P;
};
ProjectorJet projector_jet(double K);

} // namespace integrals
} // namespace qwalk
