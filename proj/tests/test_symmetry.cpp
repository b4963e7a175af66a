#include "qwalk/spectral.hpp"
#include "qwalk/symmetry.hpp"

#include <doctest.h>

#include <cmath>

using namespace qwalk;

namespace {
long choose2(long m) { return m * (m - 1) / 2; }
}

TEST_CASE("partitions")
{
    Partition p = partition(7, 0b1001010);
    CHECK(p.s_up == std::vector<int>{1, 4, 6});
    CHECK(p.s_down == std::vector<int>{2, 3, 5, 7});
    CHECK(p.p == 9);
    CHECK(partition(7, 0b1001011).s_up == p.s_up);
    CHECK(partition(6, 0).p == choose2(6));
    CHECK(partition(2, 2).p == 0);
    CHECK_THROWS(partition(3, 8));
}

TEST_CASE("preserving transpositions")
{
    CHECK(count_preserving_swaps(7, 0b1001010) == 9);
    CHECK(count_preserving_swaps(5, 0b01010) == 4);
    CHECK(4 * (choose2(5) - 4) == mu(5, 0b01010));
    CHECK(count_preserving_swaps(2, 2) == 0);
    CHECK(count_preserving_swaps(4, 0) == choose2(4));
}

TEST_CASE("swapping within a symmetric vector changes nothing")
{
    auto v = eigenvector_P(2, 0);
    CHECK(apply_transposition(v, 2, 1, 2) == v);
    auto w = eigenvector_P(2, 2);
    CHECK(apply_transposition(w, 2, 1, 2) != w);
    CHECK_THROWS(apply_transposition(v, 2, 1, 1));
}

TEST_CASE("exhaustive sweep n <= 8")
{
    for (int n = 2; n <= 8; ++n)
        for (unsigned long k = 0; k < (1UL << n); ++k) {
            Partition p = partition(n, k);
            const long ex = count_preserving_swaps(n, k);
            REQUIRE(ex == choose2(p.n_up()) + choose2(p.n_down()));
            REQUIRE(4 * (choose2(n) - ex) == mu(n, k));
            const auto v = eigenvector_P(n, k);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    REQUIRE((apply_transposition(v, n, i, j) == v) == swap_preserves(n, k, i, j));
        }
}

TEST_CASE("mu relation up to n = 10")
{
    for (int n = 9; n <= 10; ++n)
        for (unsigned long k = 0; k < (1UL << n); ++k)
            REQUIRE(4 * (choose2(n) - partition(n, k).p) == mu(n, k));
}

TEST_CASE("more symmetry means a smaller eigenvalue")
{
    for (int n = 3; n <= 8; ++n)
        for (unsigned long a = 0; a < (1UL << n); a += 2)
            for (unsigned long b = 0; b < (1UL << n); b += 2) {
                const long pa = partition(n, a).p, pb = partition(n, b).p;
                if (pa > pb)
                    REQUIRE(eta(n, a) < eta(n, b));
            }
}

TEST_CASE("relabeling maps one eigenstate onto another of equal weight")
{
    const int n = 7;
    const unsigned long k = 0b1001010, target = 0b0110100;
    auto perm = relabeling(n, k, target);
    CoinVector moved = relabel(eigenstate(n, k), perm);
    CoinVector goal = eigenstate(n, target);
    double worst = 0;
    for (size_t i = 0; i < moved.amp.size(); ++i)
        worst = std::max(worst, std::abs(moved.amp[i] - goal.amp[i]));
    CHECK(worst < 1e-14);
    CHECK(eta(n, k) == eta(n, target));
    CHECK_THROWS(relabeling(n, k, 0b0110000));
}

TEST_CASE("transposition on a coin vector")
{
    CoinVector a = CoinVector::basis(3, 0b100);
    CoinVector b = apply_transposition(a, 1, 3);
    CHECK(std::abs(b.amp[0b001] - 1.0) < 1e-15);
}
