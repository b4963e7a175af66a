#include "qwalk/distance.hpp"
#include "qwalk/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qwalk;

TEST_CASE("single particle has no relative distance")
{
    for (int t : {0, 5, 40})
        CHECK(mean_distance(CoinVector::basis(1, 1), {}, t) == 0.0);
}

TEST_CASE("all at the origin at t = 0")
{
    CHECK(std::abs(mean_distance(eigenstate(4, 6), {}, 0)) < 1e-14);
}

TEST_CASE("initial offsets enter as the plain spread")
{
    CHECK(mean_distance(CoinVector::basis(2, 0), {1, -1}, 0) == doctest::Approx(2));
}

TEST_CASE("distance is non-negative and matches the oracle")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2;
        std::vector<cplx> v(1UL << n);
        double s = 0;
        for (auto& z : v) {
            z = {g(rng), g(rng)};
            s += std::norm(z);
        }
        for (auto& z : v)
            z /= std::sqrt(s);
        CoinVector a(n, v);
        for (int t : {3, 9}) {
            const double d = mean_distance(a, {}, t);
            CHECK(d >= 0);
            CHECK(std::abs(d - BruteForceState(a, t).mean_distance()) < 1e-10);
        }
    }
}

TEST_CASE("long-time slope meets the quadratic form")
{
    CoinVector a = CoinVector::basis(2, 0b01);
    const double d = mean_distance(a, {}, 200) / (200.0 * 200.0);
    CHECK(std::abs(d / c2(a) - 1) < 0.02);

    DistanceCurve c = distance_curve(a, {}, 100, 300);
    CHECK(std::abs(c.fitted_c2 / c2(a) - 1) < 0.02);
    CHECK(c.fitted_c2 >= eta_min(2) * 0.98);
    CHECK(c.fitted_c2 <= eta_max(2) * 1.02);
}

TEST_CASE("eigenstate ordering follows eta")
{
    const double lo = distance_curve(eigenstate(2, 0), {}, 100, 200).fitted_c2;
    const double hi = distance_curve(eigenstate(2, 2), {}, 100, 200).fitted_c2;
    CHECK(eta(2, 0) < eta(2, 2));
    CHECK(lo < hi);
}

TEST_CASE("fit recovers an exact polynomial")
{
    std::vector<int> t;
    std::vector<double> d;
    for (int s = 10; s <= 50; ++s) {
        t.push_back(s);
        d.push_back(0.3 * s * s + 2.0 * s - 7);
    }
    CHECK(fit_c2(t, d) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS(fit_c2({1, 2}, {1.0, 2.0}));
}

TEST_CASE("classical baseline formula")
{
    CHECK(classical_baseline(2, 10) == doctest::Approx(10));
    CHECK(classical_baseline(2, 0, {1, -1}) == doctest::Approx(2));
    CHECK(classical_baseline(3, 100) == doctest::Approx(200));
}

TEST_CASE("Monte Carlo agrees with the baseline and is reproducible")
{
    auto s = classical_monte_carlo(3, 100, 100000, 42);
    CHECK(std::abs(s[100].mean - 200) < 3 * s[100].stderr_);
    CHECK(std::abs(regression_slope(s, 20, 100) / 2 - 1) < 0.02);
    CHECK(s[0].mean == 0.0);

    auto again = classical_monte_carlo(3, 100, 100000, 42);
    for (int t = 0; t <= 100; ++t)
        REQUIRE(s[t].mean == again[t].mean);
    auto other = classical_monte_carlo(3, 100, 100000, 43);
    CHECK(other[100].mean != s[100].mean);
}
