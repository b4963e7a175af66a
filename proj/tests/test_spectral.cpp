#include "qwalk/spectral.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace qwalk;

namespace {
const double a = 1 - 1 / std::sqrt(2.0);
}

TEST_CASE("bit helpers")
{
    CHECK(hamming_weight(0) == 0);
    CHECK(hamming_distance(5, 5) == 0);
    CHECK(common_ones(9, 0) == 0);
    CHECK(hamming_weight(0b1001010) == 3);
    CHECK(hamming_distance(0b1001010, 0b0110100) == 6);
}

TEST_CASE("Pell numbers and matrix powers")
{
    const long long F[] = {1, 0, 1, 2, 5, 12, 29, 70};
    for (int i = -1; i <= 6; ++i)
        CHECK(pell(i) == F[i + 1]);
    for (int x = 0; x <= 12; ++x)
        for (int y = 0; y <= 12; ++y) {
            IntMat2 p = pell_power(x), q = pell_power(y), r = pell_power(x + y);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    REQUIRE(p[i][0] * q[0][j] + p[i][1] * q[1][j] == r[i][j]);
        }
}

TEST_CASE("M for one and two particles")
{
    QuadraticForm m1(1);
    for (unsigned long i = 0; i < 2; ++i)
        for (unsigned long j = 0; j < 2; ++j)
            CHECK(m1.entry(i, j) == 0.0);
    QuadraticForm m2(2);
    CHECK(m2.entry(0, 0) == doctest::Approx(a - a * a));
}

TEST_CASE("two-particle spectrum")
{
    auto lv = spectrum_levels(2);
    REQUIRE(lv.size() == 2);
    CHECK(lv[0].eta == doctest::Approx(std::sqrt(2.0) * a * a));
    CHECK(lv[1].eta == doctest::Approx((4 + std::sqrt(2.0)) * a * a));
    CHECK(lv[0].degeneracy == 2);
    CHECK(lv[1].degeneracy == 2);
}

TEST_CASE("integer eigenvectors for n = 2")
{
    CHECK(eigenvector_P(2, 0) == std::vector<long long>{1, 0, 0, 1});
    CHECK(eigenvector_P(2, 3) == std::vector<long long>{1, 2, 0, -1});
}

TEST_CASE("analytic spectrum equals the dense eigensolver")
{
    for (int n = 2; n <= 10; ++n) {
        std::vector<double> expect;
        long long total = 0;
        for (auto& l : spectrum_levels(n)) {
            total += l.degeneracy;
            expect.insert(expect.end(), l.degeneracy, l.eta);
        }
        REQUIRE(total == (1LL << n));
        std::sort(expect.begin(), expect.end());
        Eigen::VectorXd got = dense_spectrum(n);
        REQUIRE(got.size() == static_cast<long>(expect.size()));
        for (long i = 0; i < got.size(); ++i)
            REQUIRE(std::abs(got(i) - expect[i]) < 1e-9);
    }
}

TEST_CASE("every P_k is an eigenvector, both parities")
{
    for (int n = 2; n <= 10; ++n) {
        QuadraticForm M(n);
        for (unsigned long k = 0; k < (1UL << n); ++k) {
            CoinVector v = eigenstate(n, k);
            Eigen::Map<const Eigen::VectorXcd> x(v.amp.data(), static_cast<long>(v.amp.size()));
            REQUIRE((M.apply(x) - eta(n, k) * x).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("matrix-free product equals the dense matrix")
{
    QuadraticForm M(6);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(64);
    CHECK((M.apply(v) - M.dense() * v).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("c2 values")
{
    CHECK(c2(eigenstate(2, 0)) == doctest::Approx(std::sqrt(2.0) * a * a).epsilon(1e-12));
    CHECK(c2(CoinVector::basis(2, 0)) == doctest::Approx(a * (1 - a)).epsilon(1e-12));
    CHECK(c2(eigenstate(7, 0b1001010)) == doctest::Approx(c2(eigenstate(7, 0b0110100))).epsilon(1e-14));
}

TEST_CASE("eta bounds")
{
    for (int n = 2; n <= 12; ++n) {
        double lo = 1e300, hi = 0;
        for (auto& l : spectrum_levels(n)) {
            lo = std::min(lo, l.eta);
            hi = std::max(hi, l.eta);
        }
        CHECK(lo == doctest::Approx(eta_min(n)).epsilon(1e-13));
        CHECK(hi == doctest::Approx(eta_max(n)).epsilon(1e-13));
    }
}

TEST_CASE("bound ratio approaches 1 + sqrt2 only like 1/n")
{
    // eta_max/eta_min - (1+sqrt2) = sqrt2/(n-1) for even n
    for (int n : {10, 100, 1000}) {
        const double gap = eta_max(n) / eta_min(n) - (1 + std::sqrt(2.0));
        CHECK(gap == doctest::Approx(std::sqrt(2.0) / (n - 1)).epsilon(1e-9));
    }
}
