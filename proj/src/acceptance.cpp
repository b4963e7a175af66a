#include "qwalk/acceptance.hpp"
#include "qwalk/distance.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/integrals.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/symmetry.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace qwalk {

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream msg;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            msg << " [failed: " << what << "]";
        }
    }
};

std::string sci(double v)
{
    char b[32];
    std::snprintf(b, sizeof b, "%.3e", v);
    return b;
}

long choose2(long m) { return m * (m - 1) / 2; }

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

double entropy_of(const Eigen::MatrixXcd& rho)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    std::vector<double> nu;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        nu.push_back(std::max(0.0, es.eigenvalues()(i)));
    return entropy_bits(nu);
}

// 1. unitarity and parity
void unitarity(Outcome& o)
{
    const double s = 1 / std::sqrt(2.0);
    const Spinor coins[] = {coin_basis(up), coin_basis(down), Spinor{cplx(s, 0), cplx(0, s)}};
    double drift = 0;
    bool parity = true;
    for (const auto& c : coins) {
        WalkerWave w = initial_wave(c);
        for (int t = 1; t <= 500; ++t) {
            w = step(w);
            drift = std::max(drift, std::abs(w.norm2() - 1));
            for (long x = -t; x <= t; ++x)
                if ((x + t) % 2 != 0 && (w.at(x, up) != 0.0 || w.at(x, down) != 0.0))
                    parity = false;
        }
    }
    o.msg << "max norm drift " << sci(drift);
    o.require(drift < 1e-12, "norm drift < 1e-12");
    o.require(parity, "odd-parity amplitudes exactly 0");
}

// 2. momentum-space eigensystem
void spectral_identity(Outcome& o)
{
    constexpr int N = 10000;
    double mod = 0, rec = 0;
    for (int i = 0; i < N; ++i) {
        const double K = -std::numbers::pi + 2 * std::numbers::pi * (i + 0.5) / N;
        CoinEigenSystem e = coin_eigensystem(K);
        Mat2 U = walk_matrix(K);
        for (int j = 0; j < 2; ++j)
            mod = std::max(mod, std::abs(std::abs(e.lambda[j]) - 1));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                cplx v = 0;
                for (int j = 0; j < 2; ++j)
                    v += e.lambda[j] * e.vec[j][r] * std::conj(e.vec[j][c]);
                rec = std::max(rec, std::abs(v - U[r][c]));
            }
    }
    o.msg << "max ||lambda|-1| " << sci(mod) << ", reconstruction " << sci(rec);
    o.require(mod < 1e-12, "|lambda| = 1");
    o.require(rec < 1e-12, "U_K reconstruction");
}

// 3. ballistic constant
void ballistic(Outcome& o)
{
    const int t = 400;
    WalkerWave w = evolve(up, t);
    double m2 = 0;
    for (long x = -t; x <= t; ++x)
        m2 += double(x) * double(x) * w.prob(x);
    const double r = m2 / (double(t) * t);
    o.msg << "<x^2>/t^2 = " << r << " vs " << ballistic_constant();
    o.require(std::abs(r - ballistic_constant()) < 0.01, "within 0.01");
}

// 4. closed forms against the defining integrals
void integral_table(Outcome& o)
{
    namespace I = integrals;
    double smooth = 0;
    for (long xp = -6; xp <= 6; ++xp) {
        smooth = std::max(smooth, std::abs(I::a(xp) - I::quad::a(xp)));
        for (long x = -6; x <= 6; ++x)
            for (int sp = 0; sp < 2; ++sp)
                for (int s = 0; s < 2; ++s) {
                    smooth = std::max(smooth, std::abs(I::A1(xp, x, sp, s) - I::quad::A1(xp, x, sp, s)));
                    smooth = std::max(smooth, std::abs(I::AC(xp, x, sp, s) - I::quad::AC(xp, x, sp, s)));
                    smooth = std::max(smooth, std::abs(I::B1(xp, x, sp, s) - I::quad::B1(xp, x, sp, s)));
                }
    }
    for (long dx = -12; dx <= 12; ++dx)
        for (int sp = 0; sp < 2; ++sp)
            for (int s = 0; s < 2; ++s) {
                smooth = std::max(smooth, std::abs(I::A2(dx, sp, s) - I::quad::A2(dx, sp, s)));
                smooth = std::max(smooth, std::abs(I::B(dx, sp, s) - I::quad::B(dx, sp, s)));
            }
    double osc = 0; // in units of t^{-1/2}
    for (int t : {100, 400})
        for (long xp = -6; xp <= 6; ++xp)
            for (long x = -6; x <= 6; ++x)
                for (int sp = 0; sp < 2; ++sp)
                    for (int s = 0; s < 2; ++s) {
                        const double scale = std::sqrt(double(t));
                        osc = std::max(osc, scale * std::abs(I::Ao(xp, x, sp, s, t) - I::quad::Ao(xp, x, sp, s, t)));
                        osc = std::max(osc, scale * std::abs(I::Bo(xp, x, sp, s, t) - I::quad::Bo(xp, x, sp, s, t)));
                    }
    o.msg << "smooth max err " << sci(smooth) << ", oscillatory max err " << sci(osc) << " t^-1/2";
    o.require(smooth < 1e-8, "smooth integrals within 1e-8");
    o.require(osc < 0.05, "oscillatory integrals within 0.05 t^-1/2");
}

// 5. analytic spectrum against the dense eigensolver
void spectrum(Outcome& o)
{
    double gap = 0, resid = 0;
    bool counts = true;
    for (int n = 2; n <= 10; ++n) {
        std::vector<double> expect;
        long long total = 0;
        for (auto& l : spectrum_levels(n)) {
            total += l.degeneracy;
            for (long d = 0; d < l.degeneracy; ++d)
                expect.push_back(l.eta);
        }
        counts = counts && total == (1LL << n);
        Eigen::VectorXd got = dense_spectrum(n);
        std::sort(expect.begin(), expect.end());
        if (static_cast<long>(expect.size()) != got.size()) {
            counts = false;
            continue;
        }
        for (long i = 0; i < got.size(); ++i)
            gap = std::max(gap, std::abs(got(i) - expect[i]));
        QuadraticForm M(n);
        for (unsigned long k = 0; k < (1UL << n); ++k) {
            CoinVector v = eigenstate(n, k);
            Eigen::Map<const Eigen::VectorXcd> a(v.amp.data(), static_cast<long>(v.amp.size()));
            resid = std::max(resid, (M.apply(a) - eta(n, k) * a).norm());
        }
    }
    const double ratio_gap = eta_max(1000) / eta_min(1000) - (1 + std::sqrt(2.0));
    o.msg << "eigenvalue gap " << sci(gap) << ", residual " << sci(resid) << ", n=1000 ratio - (1+sqrt2) = "
          << sci(ratio_gap);
    o.require(counts, "degeneracies sum to 2^n");
    o.require(gap < 1e-9, "spectra agree within 1e-9");
    o.require(resid < 1e-9, "eigen-residuals < 1e-9");
    o.require(std::abs(ratio_gap) < 1e-3, "n=1000 ratio within 1e-3 of 1+sqrt2");
}

// 6. fitted c2 against a^dagger M a
void c2_consistency(Outcome& o)
{
    std::mt19937_64 rng(6);
    double worst = 0;
    bool inside = true;
    for (int n : {2, 3}) {
        std::vector<CoinVector> states;
        for (unsigned long k = 0; k < (1UL << n); ++k)
            states.push_back(eigenstate(n, k));
        while (states.size() < 20)
            states.push_back(random_coin(n, rng));
        const double lo = eta_min(n), hi = eta_max(n);
        for (auto& a : states) {
            const double exact = c2(a);
            const double fit = distance_curve(a, {}, 100, 300).fitted_c2;
            worst = std::max(worst, std::abs(fit - exact) / exact);
            inside = inside && exact >= lo - 1e-12 && exact <= hi + 1e-12 && fit >= lo * 0.98 && fit <= hi * 1.02;
        }
    }
    o.msg << "max relative deviation " << sci(worst);
    o.require(worst < 0.02, "fit within 2%");
    o.require(inside, "c2 in [eta_min, eta_max]");
}

// 7. factorized moments against the explicit tensor-product state
void brute_force(Outcome& o)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_n(1, BruteForceState::max_particles), pick_t(0, BruteForceState::max_steps),
        pick_x(-3, 3);
    double err = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = pick_n(rng), t = pick_t(rng);
        CoinVector a = random_coin(n, rng);
        Positions pos(n);
        for (auto& p : pos)
            p = pick_x(rng);
        BruteForceState bf(a, t, pos);
        MomentTable m = moment_table(t);
        for (int i = 1; i <= n; ++i) {
            err = std::max(err, std::abs(mean_x(m, a, i, pos) - bf.mean_x(i)));
            err = std::max(err, std::abs(mean_x2(m, a, i, pos) - bf.mean_x2(i)));
            for (int j = i + 1; j <= n; ++j) {
                err = std::max(err, std::abs(pair_moment(m, a, i, j, pos) - bf.pair_moment(i, j)));
                JointDistribution f = joint_distribution(i, j, a, t, pos), b = bf.joint_distribution(i, j);
                for (long r = 0; r < b.size; ++r)
                    for (long c = 0; c < b.size; ++c)
                        err = std::max(err, std::abs(f.at(b.lo_a + r, b.lo_b + c) - b.p[r * b.size + c]));
                err = std::max(err, std::abs(f.total() - b.total()));
            }
        }
        err = std::max(err, std::abs(mean_distance(m, a, pos) - bf.mean_distance()));
    }
    o.msg << "max deviation " << sci(err);
    o.require(err < 1e-10, "within 1e-10");
}

// 8. transposition symmetry
void symmetry(Outcome& o)
{
    bool counts = true, mus = true, order = true, rule = true;
    for (int n = 2; n <= 8; ++n) {
        std::vector<std::pair<long, double>> pe;
        for (unsigned long k = 0; k < (1UL << n); ++k) {
            Partition p = partition(n, k);
            const long ex = count_preserving_swaps(n, k);
            counts = counts && ex == p.p && ex == choose2(p.n_up()) + choose2(p.n_down());
            mus = mus && 4 * (choose2(n) - ex) == mu(n, k);
            const auto v = eigenvector_P(n, k);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    rule = rule && ((apply_transposition(v, n, i, j) == v) == swap_preserves(n, k, i, j));
            pe.push_back({ex, eta(n, k)});
        }
        for (auto& a : pe)
            for (auto& b : pe) {
                if (a.first < b.first)
                    order = order && a.second > b.second;
                if (a.first == b.first)
                    order = order && std::abs(a.second - b.second) < 1e-12;
            }
    }
    o.msg << "n=2..8, every k";
    o.require(counts, "p_k = C(n_up,2)+C(n_down,2)");
    o.require(mus, "4(C(n,2)-p_k) = mu_k");
    o.require(rule, "per-pair rule matches exhaustive check");
    o.require(order, "p_k and eta_k anti-correlated");
}

// 9. entanglement across the subgraph cut
void entropy(Outcome& o)
{
    double err = 0, rank3 = 0;
    bool sums = true;
    for (int n = 3; n <= 10; ++n)
        for (unsigned long k = 2; k < (1UL << n); ++k) {
            SchmidtData s = schmidt(eigenstate(n, k), partition(n, k).s_up);
            auto cf = nu_closed_form(n, k & 1UL);
            err = std::max({err, std::abs(s.nu[0] - cf.first), std::abs(s.nu[1] - cf.second)});
            if (s.nu.size() > 2)
                rank3 = std::max(rank3, s.nu[2]);
        }
    for (int n = 2; n <= 200; ++n)
        for (bool odd : {false, true}) {
            auto cf = nu_closed_form(n, odd);
            sums = sums && cf.first + cf.second == 1.0;
        }
    bool decreasing = true;
    double slope_dev = 0;
    for (bool odd : {false, true}) {
        double prev = INFINITY;
        double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0;
        for (int n = 3; n <= 24; ++n) {
            auto cf = nu_closed_form(n, odd);
            const double e = entropy_bits({cf.first, cf.second});
            decreasing = decreasing && e < prev;
            prev = e;
            if (n >= 12) {
                cnt += 1;
                sx += n;
                sy += std::log(e);
                sxx += double(n) * n;
                sxy += n * std::log(e);
            }
        }
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        const double target = std::log(3 - 2 * std::sqrt(2.0));
        slope_dev = std::max(slope_dev, std::abs(slope / target - 1));
    }
    o.msg << "max nu deviation " << sci(err) << ", third nu " << sci(rank3) << ", log-slope off by "
          << sci(slope_dev);
    o.require(err < 1e-10, "closed form matches Schmidt oracle");
    o.require(rank3 < 1e-12, "rank 2");
    o.require(sums, "nu1 + nu2 = 1 exactly");
    o.require(decreasing, "entropy decreasing in n");
    o.require(slope_dev < 0.05, "log-entropy slope within 5%");
}

// 10. figure properties
void figures(Outcome& o)
{
    const int n = 7;
    const unsigned long k = 0b1001010, k2 = 0b0110100;
    CoinVector a = eigenstate(n, k);
    Partition p = partition(n, k);
    MomentTable m = moment_table(100);
    std::vector<double> x2(n + 1);
    for (int i = 1; i <= n; ++i)
        x2[i] = mean_x2(m, a, i);
    double spread = 0;
    for (auto* side : {&p.s_up, &p.s_down})
        for (int i : *side)
            spread = std::max(spread, std::abs(x2[i] - x2[side->front()]));
    bool signs = true;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const double v = pair_moment(m, a, i, j);
            signs = signs && (p.same_side(i, j) ? v > 0 : v < 0);
        }
    o.require(spread < 1e-10, "within-subgraph <x_i^2> equal");
    o.require(signs, "pair-moment sign structure");

    JointDistribution jd = joint_distribution(1, 2, a, 30);
    double fwd = 0, rev = 0;
    for (long r = 0; r < jd.size; ++r)
        for (long c = 0; c < jd.size; ++c) {
            const long x1 = jd.lo_a + r, x2v = jd.lo_b + c;
            if (x1 < 0 && x2v > 0)
                fwd += jd.p[r * jd.size + c];
            if (x2v < 0 && x1 > 0)
                rev += jd.p[r * jd.size + c];
        }
    o.require(fwd > rev, "x1<0<x2 outweighs the reverse");

    auto tables = moment_tables(50);
    std::vector<double> S;
    for (int t = 0; t <= 50; ++t)
        S.push_back(entropy_of(reduced_coin_density(a, tables[t], {2})));
    bool up_step = false, down_step = false;
    for (int t = 11; t <= 50; ++t) {
        up_step = up_step || S[t] > S[t - 1] + 1e-12;
        down_step = down_step || S[t] < S[t - 1] - 1e-12;
    }
    o.require(S[5] > S[0], "coin entropy S(5) > S(0)");
    o.require(up_step && down_step, "non-monotone tail");

    const double c_a = c2(a), c_b = c2(eigenstate(n, k2));
    o.require(std::abs(c_a - c_b) < 1e-12, "relabeled eigenstates share c2");
    o.msg << "x2 spread " << sci(spread) << ", P(x1<0<x2) " << fwd << " vs " << rev << ", S(0) " << S[0] << ", S(5) "
          << S[5] << ", c2 gap " << sci(std::abs(c_a - c_b));
}

// 11. classical walkers
void classical(Outcome& o)
{
    auto s = classical_monte_carlo(3, 100, 100000, 20240601);
    const double dev = std::abs(s[100].mean - 200);
    const double slope = regression_slope(s, 20, 100);
    o.msg << "D(100) = " << s[100].mean << " +- " << s[100].stderr_ << ", slope " << slope;
    o.require(dev < 3 * s[100].stderr_, "within 3 standard errors of 200");
    o.require(std::abs(slope / 2 - 1) < 0.02, "slope within 2% of 2");
}

struct Criterion {
    int id;
    const char* name;
    double budget; // seconds
    std::function<void(Outcome&)> run;
};

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& log, const std::vector<int>& only)
{
    const std::vector<Criterion> all = {
        {1, "unitarity and parity", 1, unitarity},
        {2, "momentum eigensystem", 1, spectral_identity},
        {3, "ballistic constant", 2, ballistic},
        {4, "integral table vs quadrature", 30, integral_table},
        {5, "spectrum equivalence", 60, spectrum},
        {6, "c2 consistency", 120, c2_consistency},
        {7, "brute-force equivalence", 60, brute_force},
        {8, "symmetry suite", 30, symmetry},
        {9, "entropy suite", 60, entropy},
        {10, "figure properties", 180, figures},
        {11, "classical baseline", 30, classical},
    };
    std::vector<CriterionResult> out;
    for (auto& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        Outcome o;
        const auto t0 = clock_type::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.msg << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
        o.require(secs < c.budget, "runtime budget " + std::to_string(int(c.budget)) + " s");
        CriterionResult r{c.id, o.pass, secs, o.msg.str()};
        char head[96];
        std::snprintf(head, sizeof head, "%s criterion %2d %-30s %7.2fs  ", r.pass ? "PASS" : "FAIL", c.id, c.name,
                      secs);
        log << head << r.detail << std::endl;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace qwalk
