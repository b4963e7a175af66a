#include "qwalk/multiparticle.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/symmetry.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace qwalk;

namespace {
CoinVector random_coin(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    std::vector<cplx> v(1UL << n);
    double s = 0;
    for (auto& z : v) {
        z = {g(rng), g(rng)};
        s += std::norm(z);
    }
    for (auto& z : v)
        z /= std::sqrt(s);
    return CoinVector(n, v);
}

double vn_entropy(const Eigen::MatrixXcd& rho)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double s = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        const double v = es.eigenvalues()(i);
        if (v > 1e-15)
            s -= v * std::log2(v);
    }
    return s;
}

const unsigned long fig_k = 0b1001010;
} // namespace

TEST_CASE("coin vector validation")
{
    CHECK_THROWS(CoinVector(2, std::vector<cplx>(3, 0.5)));
    CHECK_THROWS(CoinVector(1, {1.0, 1.0}));
    CHECK_NOTHROW(CoinVector(1, {0.6, 0.8}));
    CoinVector b = CoinVector::basis(3, 0b100);
    CHECK(b.coin_of(0b100, 1) == 1);
    CHECK(b.coin_of(0b100, 3) == 0);
}

TEST_CASE("moment table at t = 0 and t = 1")
{
    MomentTable m0 = moment_table(0);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(std::abs(m0.X[a][b]) == 0.0);
            CHECK(std::abs(m0.X2[a][b]) == 0.0);
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    CHECK(std::abs(m0.T[a][b][c][d] - double(a == c && b == d)) < 1e-15);
        }
    MomentTable m1 = moment_table(1);
    CHECK(std::abs(m1.X[up][up]) < 1e-15);
}

TEST_CASE("moment tables are Hermitian with a unit trace over the coin")
{
    auto tabs = moment_tables(60);
    for (auto& m : tabs) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                REQUIRE(std::abs(m.X[a][b] - std::conj(m.X[b][a])) < 1e-12);
                REQUIRE(std::abs(m.X2[a][b] - std::conj(m.X2[b][a])) < 1e-12);
                REQUIRE(std::abs(m.T[0][0][a][b] + m.T[1][1][a][b] - double(a == b)) < 1e-12);
            }
    }
    MomentTable direct = moment_table(60);
    CHECK(std::abs(direct.X2[up][up] - tabs[60].X2[up][up]) < 1e-12);
}

TEST_CASE("ballistic constant from the table")
{
    MomentTable m = moment_table(100);
    CHECK(std::abs(m.X2[up][up].real() / 1e4 - ballistic_constant()) < 0.02);
}

TEST_CASE("symmetric coin gives an unbiased walk")
{
    const double s = 1 / std::sqrt(2.0);
    CoinVector a(1, {cplx(0, s), cplx(s, 0)}); // (|up> + i|down>)/sqrt2
    CHECK(std::abs(mean_x(1, a, 50)) < 1e-12);
    CHECK(mean_x(1, a, 0) == 0.0);
}

TEST_CASE("product states factorize")
{
    CoinVector a = CoinVector::basis(3, 0b111);
    MomentTable m = moment_table(17);
    const double xu = m.X[up][up].real();
    CHECK(pair_moment(m, a, 1, 3) == doctest::Approx(xu * xu).epsilon(1e-12));

    JointDistribution jd = joint_distribution(1, 2, a, 9);
    WalkerWave w = evolve(up, 9);
    double worst = 0;
    for (long x = -9; x <= 9; ++x)
        for (long y = -9; y <= 9; ++y)
            worst = std::max(worst, std::abs(jd.at(x, y) - w.prob(x) * w.prob(y)));
    CHECK(worst < 1e-14);
    CHECK(joint_distribution(1, 2, a, 0).at(0, 0) == doctest::Approx(1));
}

TEST_CASE("eigenstate moments at t = 100 follow the subgraphs")
{
    CoinVector a = eigenstate(7, fig_k);
    MomentTable m = moment_table(100);
    for (int i : {4, 6})
        CHECK(std::abs(mean_x2(m, a, i) - mean_x2(m, a, 1)) < 1e-10);
    for (int i : {3, 5, 7})
        CHECK(std::abs(mean_x2(m, a, i) - mean_x2(m, a, 2)) < 1e-10);
    Partition p = partition(7, fig_k);
    for (int j = 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) {
            const double v = pair_moment(m, a, j, k);
            if (p.same_side(j, k))
                CHECK(v > 0);
            else
                CHECK(v < 0);
        }
}

TEST_CASE("same-subgraph relabeling leaves observables unchanged")
{
    CoinVector a = eigenstate(5, 0b10100);
    const int t = 11;
    MomentTable m = moment_table(t);
    // particles 1 and 3 share S_up, 2 and 4 share S_down
    CHECK(std::abs(mean_x2(m, a, 1) - mean_x2(m, a, 3)) < 1e-10);
    CHECK(std::abs(pair_moment(m, a, 1, 2) - pair_moment(m, a, 3, 2)) < 1e-10);
    CHECK(std::abs(pair_moment(m, a, 1, 2) - pair_moment(m, a, 3, 4)) < 1e-10);
    JointDistribution p12 = joint_distribution(1, 2, a, t), p32 = joint_distribution(3, 2, a, t);
    double worst = 0;
    for (long x = -t; x <= t; ++x)
        for (long y = -t; y <= t; ++y)
            worst = std::max(worst, std::abs(p12.at(x, y) - p32.at(x, y)));
    CHECK(worst < 1e-10);
}

TEST_CASE("factorized path against the tensor-product oracle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 3, t = trial % 13;
        CoinVector a = random_coin(n, rng);
        Positions pos(n);
        for (int i = 0; i < n; ++i)
            pos[i] = static_cast<long>(rng() % 7) - 3;
        BruteForceState bf(a, t, pos);
        MomentTable m = moment_table(t);
        REQUIRE(std::abs(bf.norm2() - 1) < 1e-12);
        for (int i = 1; i <= n; ++i) {
            REQUIRE(std::abs(mean_x(m, a, i, pos) - bf.mean_x(i)) < 1e-10);
            REQUIRE(std::abs(mean_x2(m, a, i, pos) - bf.mean_x2(i)) < 1e-10);
            for (int j = i + 1; j <= n; ++j) {
                REQUIRE(std::abs(pair_moment(m, a, i, j, pos) - bf.pair_moment(i, j)) < 1e-10);
                JointDistribution f = joint_distribution(i, j, a, t, pos), b = bf.joint_distribution(i, j);
                for (long r = 0; r < b.size; ++r)
                    for (long c = 0; c < b.size; ++c)
                        REQUIRE(std::abs(f.at(b.lo_a + r, b.lo_b + c) - b.p[r * b.size + c]) < 1e-10);
            }
        }
        for (int i = 1; i <= n && n > 1; ++i) {
            Eigen::MatrixXcd d = reduced_coin_density(a, m, {i}) - bf.coin_density({i});
            REQUIRE(d.cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("Bell-like coin joint distribution against the oracle")
{
    const double s = 1 / std::sqrt(2.0);
    CoinVector a(2, {0.0, s, -s, 0.0});
    JointDistribution f = joint_distribution(1, 2, a, 8), b = BruteForceState(a, 8).joint_distribution(1, 2);
    double worst = 0;
    for (long r = 0; r < b.size; ++r)
        for (long c = 0; c < b.size; ++c)
            worst = std::max(worst, std::abs(f.at(b.lo_a + r, b.lo_b + c) - b.p[r * b.size + c]));
    CHECK(worst < 1e-10);
    CHECK(f.total() == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("reduced coin densities are states")
{
    std::mt19937_64 rng(5);
    CoinVector a = random_coin(4, rng);
    for (int t : {0, 3, 20}) {
        for (std::vector<int> cut : {std::vector<int>{1}, {2, 4}, {1, 2, 3}}) {
            Eigen::MatrixXcd r = reduced_coin_density(a, t, cut);
            CHECK((r - r.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(std::abs(r.trace() - 1.0) < 1e-12);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r);
            CHECK(es.eigenvalues().minCoeff() > -1e-10);
        }
    }
    Eigen::MatrixXcd r0 = reduced_coin_density(a, 0, {1, 3});
    CHECK((r0 - partial_coin_density(a, {1, 3})).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("product coin has zero single-particle entropy at t = 0")
{
    CoinVector a = CoinVector::basis(3, 0b010);
    CHECK(vn_entropy(reduced_coin_density(a, 0, {2})) < 1e-12);
}

TEST_CASE("coin entropy of particle 2 grows early")
{
    CoinVector a = eigenstate(7, fig_k);
    const double s0 = vn_entropy(reduced_coin_density(a, 0, {2}));
    const double s5 = vn_entropy(reduced_coin_density(a, 5, {2}));
    CHECK(s5 > s0);
}

TEST_CASE("particle-cut entropy does not move")
{
    // position+coin of one particle against the rest: local unitaries only
    std::mt19937_64 rng(9);
    CoinVector a = random_coin(2, rng);
    double first = -1;
    for (int t = 0; t <= 10; ++t) {
        BruteForceState bf(a, t);
        const double s = vn_entropy(bf.particle_density(1));
        if (first < 0)
            first = s;
        CHECK(std::abs(s - first) < 1e-9);
    }
}

TEST_CASE("n = 1 oracle reduces to evolve")
{
    CoinVector a(1, {0.6, cplx(0, 0.8)});
    BruteForceState bf(a, 6);
    WalkerWave w = evolve(Spinor{a.amp[down], a.amp[up]}, 6);
    double m2 = 0;
    for (long x = -6; x <= 6; ++x)
        m2 += double(x) * x * w.prob(x);
    CHECK(bf.mean_x2(1) == doctest::Approx(m2).epsilon(1e-12));
}

TEST_CASE("oracle size limits")
{
    CHECK_THROWS(BruteForceState(CoinVector::basis(4, 0), 2));
    CHECK_THROWS(BruteForceState(CoinVector::basis(2, 0), 13));
}
