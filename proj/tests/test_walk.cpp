#include "qwalk/walk.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qwalk;

namespace {
const double r2 = 1 / std::sqrt(2.0);

bool near(cplx a, cplx b, double tol = 1e-14) { return std::abs(a - b) < tol; }
} // namespace

TEST_CASE("one step from up and from down")
{
    WalkerWave u = evolve(up, 1);
    CHECK(near(u.at(1, up), r2));
    CHECK(near(u.at(-1, down), r2));
    CHECK(near(u.at(1, down), 0.0));
    CHECK(near(u.at(-1, up), 0.0));

    WalkerWave d = evolve(down, 1);
    CHECK(near(d.at(1, up), r2));
    CHECK(near(d.at(-1, down), -r2));
}

TEST_CASE("two steps from up")
{
    WalkerWave w = evolve(up, 2);
    CHECK(near(w.at(2, up), 0.5));
    CHECK(near(w.at(0, up), 0.5));
    CHECK(near(w.at(0, down), 0.5));
    CHECK(near(w.at(-2, down), -0.5));
    CHECK(near(w.at(2, down), 0.0));
    CHECK(near(w.at(-2, up), 0.0));
}

TEST_CASE("t = 0 is the initial ket")
{
    WalkerWave w = evolve(up, 0);
    CHECK(w.amp.size() == 2);
    CHECK(near(w.at(0, up), 1.0));
}

TEST_CASE("norm, parity and support up to 500 steps")
{
    WalkerWave w = initial_wave(Spinor{cplx(r2, 0), cplx(0, r2)});
    for (int t = 1; t <= 500; ++t) {
        w = step(w);
        REQUIRE(std::abs(w.norm2() - 1) < 1e-12);
        if (t % 50 == 0)
            for (long x = -t; x <= t; ++x)
                if ((x + t) % 2)
                    REQUIRE(w.prob(x) == 0.0);
    }
    CHECK(w.at(501, up) == 0.0);
    CHECK(w.at(-501, down) == 0.0);
}

TEST_CASE("serial and parallel steps agree bit for bit")
{
    WalkerWave a = initial_wave(coin_basis(up)), b = a;
    for (int t = 0; t < 200; ++t) {
        a = step(a);
        b = step_serial(b);
    }
    CHECK(a.amp == b.amp);
}

TEST_CASE("linearity in the coin")
{
    const cplx al(0.6, 0.1), be(-0.2, 0.7);
    const double nrm = std::sqrt(std::norm(al) + std::norm(be));
    WalkerWave mix = evolve(Spinor{be / nrm, al / nrm}, 40);
    WalkerWave u = evolve(up, 40), d = evolve(down, 40);
    double worst = 0;
    for (size_t i = 0; i < mix.amp.size(); ++i)
        worst = std::max(worst, std::abs(mix.amp[i] - (al * u.amp[i] + be * d.amp[i]) / nrm));
    CHECK(worst < 1e-12);
}

TEST_CASE("unnormalized coin is rejected")
{
    CHECK_THROWS_AS(evolve(Spinor{cplx(1, 0), cplx(1, 0)}, 3), std::invalid_argument);
    CHECK_THROWS(evolve(up, -1));
}

TEST_CASE("ballistic second moment")
{
    for (int t : {100, 400}) {
        WalkerWave w = evolve(up, t);
        double m2 = 0;
        for (long x = -t; x <= t; ++x)
            m2 += double(x) * x * w.prob(x);
        CHECK(std::abs(m2 / (double(t) * t) - (1 - r2)) < 0.02);
    }
}

TEST_CASE("momentum matrix at K = 0 is the Hadamard")
{
    CoinEigenSystem e = coin_eigensystem(0);
    std::array<double, 2> re{e.lambda[0].real(), e.lambda[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-1).epsilon(1e-14));
    CHECK(re[1] == doctest::Approx(1).epsilon(1e-14));
    Mat2 U = walk_matrix(0);
    CHECK(near(U[up][up], r2));
    CHECK(near(U[up][down], r2));
    CHECK(near(U[down][up], r2));
    CHECK(near(U[down][down], -r2));
}

TEST_CASE("eigenvalues at K = pi/2")
{
    CoinEigenSystem e = coin_eigensystem(std::numbers::pi / 2);
    for (auto l : e.lambda) {
        CHECK(std::abs(std::abs(l) - 1) < 1e-14);
        CHECK(l.imag() == doctest::Approx(-r2));
        CHECK(std::abs(l.real()) == doctest::Approx(r2));
    }
}

TEST_CASE("eigensystem is unitary and reconstructs U_K")
{
    for (int i = 0; i < 10000; ++i) {
        const double K = -std::numbers::pi + 2 * std::numbers::pi * (i + 0.37) / 10000;
        CoinEigenSystem e = coin_eigensystem(K);
        Mat2 U = walk_matrix(K);
        for (int j = 0; j < 2; ++j) {
            REQUIRE(std::abs(std::abs(e.lambda[j]) - 1) < 1e-12);
            REQUIRE(std::abs(std::norm(e.vec[j][0]) + std::norm(e.vec[j][1]) - 1) < 1e-12);
        }
        cplx ov = std::conj(e.vec[0][0]) * e.vec[1][0] + std::conj(e.vec[0][1]) * e.vec[1][1];
        REQUIRE(std::abs(ov) < 1e-12);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                cplx v = 0;
                for (int j = 0; j < 2; ++j)
                    v += e.lambda[j] * e.vec[j][r] * std::conj(e.vec[j][c]);
                REQUIRE(std::abs(v - U[r][c]) < 1e-12);
            }
    }
}

TEST_CASE("momentum-space amplitudes match stepping")
{
    CHECK(near(evolve_via_momentum(coin_basis(up), 0, 0, up), 1.0, 1e-10));
    CHECK(near(evolve_via_momentum(coin_basis(up), 2, 2, up), 0.5, 1e-10));
    WalkerWave w = evolve(up, 20);
    CHECK(near(evolve_via_momentum(coin_basis(up), 20, 4, down), w.at(4, down), 1e-8));

    const Spinor c{cplx(0.6, 0), cplx(0, 0.8)};
    for (int t : {7, 31, 50}) {
        WalkerWave ref = evolve(c, t);
        double worst = 0;
        for (long x = -t; x <= t; ++x)
            for (int s : {down, up})
                worst = std::max(worst, std::abs(evolve_via_momentum(c, t, x, s) - ref.at(x, s)));
        CHECK(worst < 1e-8);
    }
}
