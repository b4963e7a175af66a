#include "qwalk/integrals.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qwalk;
namespace I = qwalk::integrals;

namespace {
constexpr double pi = std::numbers::pi, sqrt2 = std::numbers::sqrt2;

// <x' s'| (U^dag)^t x^p U^t |x s> by direct stepping
cplx stepped_element(long xp, long x, int sp, int s, int t, int power)
{
    WalkerWave bra = evolve(sp, t, xp), ket = evolve(s, t, x);
    cplx acc = 0;
    const long lo = std::min(xp, x) - t, hi = std::max(xp, x) + t;
    for (long y = lo; y <= hi; ++y)
        for (int c : {down, up})
            acc += std::pow(double(y), power) * std::conj(bra.at(y - xp, c)) * ket.at(y - x, c);
    return acc;
}
} // namespace

TEST_CASE("printed constants")
{
    for (int s : {down, up}) {
        CHECK(I::A2(0, s, s).real() == doctest::Approx((sqrt2 - 2) * pi).epsilon(1e-14));
        CHECK(std::abs(I::A2(1, s, s)) < 1e-15);
        CHECK(I::A2(2, s, s).real() == doctest::Approx(-sqrt2 * pi * (3 - 2 * sqrt2)).epsilon(1e-13));
    }
    CHECK(std::abs(I::B(0, up, up) - cplx(0, (2 - sqrt2) * pi)) < 1e-13);
}

TEST_CASE("parity and coin structure of the closed forms")
{
    for (long x = -8; x <= 8; ++x) {
        CHECK(I::f(x) == I::f(-x));
        CHECK(I::A2(x, up, down) == 0.0);
        CHECK(I::A2(x, down, up) == 0.0);
    }
}

TEST_CASE("closed forms against adaptive quadrature")
{
    double worst = 0;
    for (long xp = -6; xp <= 6; ++xp) {
        worst = std::max({worst, std::abs(I::f(xp) - I::quad::f(xp)), std::abs(I::a(xp) - I::quad::a(xp))});
        for (long x = -6; x <= 6; ++x)
            for (int sp : {down, up})
                for (int s : {down, up}) {
                    worst = std::max(worst, std::abs(I::A1(xp, x, sp, s) - I::quad::A1(xp, x, sp, s)));
                    worst = std::max(worst, std::abs(I::AC(xp, x, sp, s) - I::quad::AC(xp, x, sp, s)));
                    worst = std::max(worst, std::abs(I::B1(xp, x, sp, s) - I::quad::B1(xp, x, sp, s)));
                    worst = std::max(worst, std::abs(I::A2(xp - x, sp, s) - I::quad::A2(xp - x, sp, s)));
                    worst = std::max(worst, std::abs(I::B(xp - x, sp, s) - I::quad::B(xp - x, sp, s)));
                }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("printed AC holds for up-up only")
{
    double upup = 0, other = 0;
    for (long xp = -4; xp <= 4; ++xp)
        for (long x = -4; x <= 4; ++x) {
            upup = std::max(upup, std::abs(I::AC_as_printed(xp, x) - I::quad::AC(xp, x, up, up)));
            other = std::max(other, std::abs(I::AC_as_printed(xp, x) - I::quad::AC(xp, x, down, down)));
        }
    CHECK(upup < 1e-8);
    CHECK(other > 1e-3);
}

TEST_CASE("stationary-phase pieces against the trapezoid reference")
{
    for (int t : {100, 400}) {
        double worst = 0;
        for (long xp : {-6L, -1L, 0L, 3L, 6L})
            for (long x : {-6L, 0L, 2L, 6L})
                for (int sp : {down, up})
                    for (int s : {down, up}) {
                        worst = std::max(worst, std::abs(I::Ao(xp, x, sp, s, t) - I::quad::Ao(xp, x, sp, s, t)));
                        worst = std::max(worst, std::abs(I::Bo(xp, x, sp, s, t) - I::quad::Bo(xp, x, sp, s, t)));
                    }
        CHECK(worst * std::sqrt(double(t)) < 0.05);
    }
}

TEST_CASE("trapezoid reference is converged")
{
    const cplx a = I::quad::Ao(4, -3, up, down, 400), b = I::quad::Ao(4, -3, up, down, 400, 12000);
    CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("projector jet matches finite differences")
{
    const double K = 0.731, h = 1e-5;
    auto p = I::projector_jet(K), lo = I::projector_jet(K - h), hi = I::projector_jet(K + h);
    for (int d = 0; d < 2; ++d) {
        CHECK(std::abs((hi.lam[d] - lo.lam[d]) / (2 * h) - p.dlam[d]) < 1e-8);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                CHECK(std::abs((hi.P[d][a][b] - lo.P[d][a][b]) / (2 * h) - p.dP[d][a][b]) < 1e-8);
                CHECK(std::abs((hi.dP[d][a][b] - lo.dP[d][a][b]) / (2 * h) - p.d2P[d][a][b]) < 1e-7);
            }
    }
}

TEST_CASE("expansions reproduce the stepped matrix elements")
{
    const int t = 400;
    const cplx exact = stepped_element(0, 0, up, up, t, 2);
    CHECK(std::abs(I::x2_element(0, 0, up, up, t) - exact) < 0.01 * std::abs(exact));
    // leading term alone
    CHECK(std::abs(-double(t) * t * (sqrt2 - 2) / 2 - exact.real()) < 0.01 * std::abs(exact));

    for (int tt : {100, 200})
        for (long xp : {-2L, 0L, 3L})
            for (long x : {-1L, 0L, 2L})
                for (int sp : {down, up})
                    for (int s : {down, up}) {
                        const cplx e2 = stepped_element(xp, x, sp, s, tt, 2);
                        const cplx e1 = stepped_element(xp, x, sp, s, tt, 1);
                        CHECK(std::abs(I::x2_element(xp, x, sp, s, tt) - e2) < 1e-6);
                        CHECK(std::abs(I::x_element(xp, x, sp, s, tt) - e1) < 1e-8);
                    }
}

TEST_CASE("odd separation removes the t^2 term")
{
    for (int s : {down, up})
        CHECK(std::abs(I::A2(1, s, s)) == 0.0);
}
