#include "qwalk/commands.hpp"
#include "qwalk/acceptance.hpp"
#include "qwalk/distance.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/io.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/symmetry.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace qwalk {

using nlohmann::ordered_json;

namespace {

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(trim(item));
    return out;
}

double parse_real(const std::string& s)
{
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("not a number: '" + s + "'");
    return v;
}

std::string bits(unsigned long k, int n)
{
    std::string s = "(";
    for (int i = n - 1; i >= 0; --i)
        s += ((k >> i) & 1UL) ? '1' : '0';
    return s + ")b";
}

double entropy_of(const Eigen::MatrixXcd& rho)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    std::vector<double> nu;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        nu.push_back(std::max(0.0, es.eigenvalues()(i)));
    return entropy_bits(nu);
}

struct Ctx {
    RunConfig cfg;
    std::ostream& out;
    ordered_json echo;

    bool wants(const char* f) const { return cfg.formats.count(f) > 0; }
    std::filesystem::path path(const std::string& stem, const char* ext) const { return cfg.out / (stem + ext); }

    void table(const std::string& stem, const io::Table& t)
    {
        if (wants("csv")) {
            io::write_csv(path(stem, ".csv"), t);
            out << "wrote " << path(stem, ".csv").string() << '\n';
        }
    }
    // commands with no table always get their json
    void summary(const std::string& stem, ordered_json j, bool always = false)
    {
        if (!always && !wants("json"))
            return;
        ordered_json full;
        full["toolkit"] = "qwalk";
        full["version"] = io::version;
        full["config"] = echo;
        full["result"] = std::move(j);
        io::write_json(path(stem, ".json"), full);
        out << "wrote " << path(stem, ".json").string() << '\n';
    }
    void svg(const std::string& stem, const std::string& body)
    {
        if (!wants("svg"))
            return;
        io::write_text(path(stem, ".svg"), body);
        out << "wrote " << path(stem, ".svg").string() << '\n';
    }
};

int need_t(const RunConfig& c, const char* what)
{
    if (!c.t)
        throw UsageError(std::string(what) + " needs --t");
    if (*c.t < 0)
        throw UsageError("--t must be >= 0");
    return *c.t;
}

// --coin wins; otherwise --k names an eigenstate
CoinVector coin_from(const RunConfig& c, const char* fallback)
{
    if (!c.coin.empty())
        return parse_coin(c.coin, c.n);
    if (c.k)
        return parse_coin("eigen:" + *c.k, c.n);
    return parse_coin(fallback, c.n);
}

unsigned long need_k(const RunConfig& c)
{
    if (!c.k)
        throw UsageError(c.command + " needs --k");
    const unsigned long k = parse_index(*c.k);
    if (c.n < 1 || c.n > 62 || k >= (1UL << c.n))
        throw UsageError("k does not fit in n bits");
    return k;
}

int cmd_single(Ctx& x)
{
    const int t = need_t(x.cfg, "single");
    if (x.cfg.n != 1)
        throw UsageError("single runs one walker; drop --n or pass --n 1");
    CoinVector a = parse_coin(x.cfg.coin.empty() ? "up" : x.cfg.coin, 1);
    WalkerWave w = evolve(Spinor{a.amp[down], a.amp[up]}, t);
    io::Table tab{{"x", "P_up", "P_down", "P_total"}, {}};
    double total = 0, m2 = 0;
    io::Series s{"P(x)", {}, {}};
    for (long o = -t; o <= t; o += 2) {
        const double pu = std::norm(w.at(o, up)), pd = std::norm(w.at(o, down));
        tab.rows.push_back({double(o), pu, pd, pu + pd});
        total += pu + pd;
        m2 += double(o) * double(o) * (pu + pd);
        s.x.push_back(double(o));
        s.y.push_back(pu + pd);
    }
    const std::string stem = "single_t" + std::to_string(t);
    x.table(stem, tab);
    ordered_json j{{"t", t}, {"total_probability", total}, {"second_moment", m2}};
    if (t > 0)
        j["second_moment_over_t2"] = m2 / (double(t) * t);
    x.summary(stem, j);
    x.svg(stem, io::svg_lines("position distribution, t = " + std::to_string(t), "x", "P(x)", {s}));
    x.out << "sum P = " << io::format_number(total) << "\n";
    if (std::abs(total - 1) > 1e-10) {
        x.out << "probability not conserved\n";
        return 2;
    }
    return 0;
}

int cmd_distance(Ctx& x)
{
    const int lo = x.cfg.t.value_or(0);
    if (!x.cfg.t_max)
        throw UsageError("distance needs --t-max");
    const int hi = *x.cfg.t_max;
    if (lo < 0 || hi < lo)
        throw UsageError("empty time range");
    CoinVector a = coin_from(x.cfg, "eigen:0");
    Positions pos = parse_positions(x.cfg.positions, x.cfg.n);
    DistanceCurve c = distance_curve(a, pos, lo, hi);
    io::Table tab{{"t", "mean_distance"}, {}};
    io::Series s{"<D>", {}, {}};
    for (size_t i = 0; i < c.t.size(); ++i) {
        tab.rows.push_back({double(c.t[i]), c.d[i]});
        s.x.push_back(c.t[i]);
        s.y.push_back(c.d[i]);
    }
    const std::string stem = "distance_n" + std::to_string(x.cfg.n);
    x.table(stem, tab);
    ordered_json j{{"fitted_c2", c.fitted_c2}};
    if (x.cfg.n >= 2 && x.cfg.n <= QuadraticForm::max_n) {
        j["c2"] = c2(a);
        j["eta_min"] = eta_min(x.cfg.n);
        j["eta_max"] = eta_max(x.cfg.n);
    }
    x.summary(stem, j);
    x.svg(stem, io::svg_lines("average relative distance", "t", "<D>", {s}));
    x.out << "fitted_c2 = " << io::format_number(c.fitted_c2) << "\n";
    return 0;
}

int cmd_classical(Ctx& x)
{
    const int t = need_t(x.cfg, "classical");
    Positions pos = parse_positions(x.cfg.positions, x.cfg.n);
    auto samples = classical_monte_carlo(x.cfg.n, t, x.cfg.trials, x.cfg.seed, pos);
    io::Table tab{{"t", "mean_distance", "stderr"}, {}};
    io::Series emp{"Monte Carlo", {}, {}}, exact{"(n-1)t + D(0)", {}, {}};
    for (auto& s : samples) {
        tab.rows.push_back({double(s.t), s.mean, s.stderr_});
        emp.x.push_back(s.t);
        emp.y.push_back(s.mean);
        exact.x.push_back(s.t);
        exact.y.push_back(classical_baseline(x.cfg.n, s.t, pos));
    }
    const std::string stem = "classical_n" + std::to_string(x.cfg.n);
    x.table(stem, tab);
    ordered_json j{{"final_mean", samples.back().mean},
                   {"final_stderr", samples.back().stderr_},
                   {"expected", classical_baseline(x.cfg.n, t, pos)}};
    if (t >= 2)
        j["slope"] = regression_slope(samples, t / 5, t);
    x.summary(stem, j);
    x.svg(stem, io::svg_lines("classical walkers", "t", "<D>", {emp, exact}));
    x.out << "D(" << t << ") = " << io::format_number(samples.back().mean) << " +- "
          << io::format_number(samples.back().stderr_) << "\n";
    return 0;
}

int cmd_spectrum(Ctx& x)
{
    const int n = x.cfg.n;
    if (n < 2)
        throw UsageError("spectrum needs --n >= 2");
    auto levels = spectrum_levels(n);
    io::Table lv{{"eta", "mu", "weight", "degeneracy"}, {}};
    io::Series s{"degeneracy", {}, {}};
    ordered_json jl = ordered_json::array();
    for (auto& l : levels) {
        lv.rows.push_back({l.eta, double(l.mu), double(l.w), double(l.degeneracy)});
        s.x.push_back(l.eta);
        s.y.push_back(double(l.degeneracy));
        jl.push_back({{"eta", l.eta}, {"mu", l.mu}, {"degeneracy", l.degeneracy}});
    }
    const std::string stem = "spectrum_n" + std::to_string(n);
    x.table(stem + "_levels", lv);
    if (n <= QuadraticForm::max_n) {
        auto tab = analytic_spectrum(n);
        io::Table ek{{"k", "weight", "eta", "mu", "degeneracy"}, {}};
        for (auto& e : tab.entries)
            ek.rows.push_back({double(e.k), double(e.weight), e.eta, double(e.mu), double(e.degeneracy)});
        x.table(stem + "_even_k", ek);
    }
    x.summary(stem, {{"eta_min", eta_min(n)}, {"eta_max", eta_max(n)}, {"levels", jl}});
    x.svg(stem, io::svg_lines("eigenvalues and degeneracies, n = " + std::to_string(n), "eta", "degeneracy", {s}));
    for (auto& l : levels)
        x.out << "eta = " << io::format_number(l.eta) << "  degeneracy " << l.degeneracy << "\n";
    return 0;
}

ordered_json partition_json(const Partition& p)
{
    return {{"s_up", p.s_up}, {"s_down", p.s_down}, {"p", p.p}};
}

int cmd_symmetry(Ctx& x)
{
    const int n = x.cfg.n;
    const unsigned long k = need_k(x.cfg);
    Partition p = partition(n, k);
    ordered_json j = partition_json(p);
    j["k"] = k;
    j["k_bits"] = bits(k, n);
    j["mu"] = mu(n, k);
    j["eta"] = eta(n, k);
    int rc = 0;
    if (n <= 16) {
        const long ex = count_preserving_swaps(n, k);
        j["p_exhaustive"] = ex;
        if (ex != p.p)
            rc = 2;
    }
    io::Table tab{{"i", "j", "preserves"}, {}};
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            tab.rows.push_back({double(a), double(b), double(swap_preserves(n, k, a, b))});
    const std::string stem = "symmetry_n" + std::to_string(n) + "_k" + std::to_string(k);
    x.table(stem, tab);
    x.summary(stem, j);
    auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    x.out << "S_up = " << list(p.s_up) << "  S_down = " << list(p.s_down) << "  p = " << p.p << "\n";
    if (rc)
        x.out << "exhaustive count disagrees with the partition rule\n";
    return rc;
}

int cmd_entropy(Ctx& x)
{
    const int n = x.cfg.n;
    const unsigned long k = need_k(x.cfg);
    CoinVector a = coin_from(x.cfg, "");
    Partition p = partition(n, k);
    std::vector<int> cut = x.cfg.cut.empty() ? p.s_up : x.cfg.cut;
    if (cut.empty())
        throw UsageError("eigenstate has an empty S_up; pass --cut");
    const std::string stem = "entropy_n" + std::to_string(n) + "_k" + std::to_string(k);
    if (!x.cfg.t_max) {
        SchmidtData s = schmidt(a, cut);
        auto cf = nu_closed_form(n, k & 1UL);
        io::Table tab{{"index", "nu"}, {}};
        for (size_t i = 0; i < s.nu.size(); ++i)
            tab.rows.push_back({double(i + 1), s.nu[i]});
        x.table(stem + "_schmidt", tab);
        ordered_json j{{"cut", s.cut}, {"nu", s.nu}, {"entropy_bits", s.entropy}};
        if (x.cfg.coin.empty() && cut == p.s_up)
            j["closed_form_nu"] = {cf.first, cf.second};
        x.summary(stem + "_schmidt", j);
        x.out << "entropy = " << io::format_number(s.entropy) << " bits\n";
        return 0;
    }
    const int lo = x.cfg.t.value_or(0), hi = *x.cfg.t_max;
    if (lo < 0 || hi < lo)
        throw UsageError("empty time range");
    auto tables = moment_tables(hi);
    io::Table tab{{"t", "entropy_bits"}, {}};
    io::Series s{"S", {}, {}};
    for (int t = lo; t <= hi; ++t) {
        const double e = entropy_of(reduced_coin_density(a, tables[t], cut));
        tab.rows.push_back({double(t), e});
        s.x.push_back(t);
        s.y.push_back(e);
    }
    x.table(stem + "_series", tab);
    x.summary(stem + "_series", {{"cut", cut}, {"t_lo", lo}, {"t_hi", hi}});
    x.svg(stem + "_series", io::svg_lines("coin entropy of the cut", "t", "S (bits)", {s}));
    return 0;
}

int cmd_jointdist(Ctx& x)
{
    const int t = need_t(x.cfg, "jointdist");
    std::vector<int> pr = x.cfg.pair.empty() ? std::vector<int>{1, 2} : x.cfg.pair;
    if (pr.size() != 2)
        throw UsageError("--pair takes two particle labels");
    CoinVector a = coin_from(x.cfg, "eigen:0");
    Positions pos = parse_positions(x.cfg.positions, x.cfg.n);
    JointDistribution jd = joint_distribution(pr[0], pr[1], a, t, pos);
    io::Table tab{{"x_" + std::to_string(pr[0]), "x_" + std::to_string(pr[1]), "p"}, {}};
    std::vector<double> grid(jd.size * jd.size);
    double split_a = 0, split_b = 0;
    for (long r = 0; r < jd.size; ++r)
        for (long c = 0; c < jd.size; ++c) {
            const double v = jd.p[r * jd.size + c];
            const long xa = jd.lo_a + r, xb = jd.lo_b + c;
            grid[c * jd.size + r] = v;
            if (v != 0)
                tab.rows.push_back({double(xa), double(xb), v});
            if (xa < 0 && xb > 0)
                split_a += v;
            if (xb < 0 && xa > 0)
                split_b += v;
        }
    const std::string stem = "jointdist_t" + std::to_string(t) + "_" + std::to_string(pr[0]) + "_" +
                             std::to_string(pr[1]);
    x.table(stem, tab);
    x.summary(stem, {{"total", jd.total()}, {"P_first_neg_second_pos", split_a}, {"P_first_pos_second_neg", split_b}});
    x.svg(stem, io::svg_heatmap("two-particle position distribution", grid, jd.size, jd.size, double(jd.lo_a),
                                double(jd.lo_b), "x_" + std::to_string(pr[0]), "x_" + std::to_string(pr[1])));
    x.out << "P(x" << pr[0] << "<0<x" << pr[1] << ") = " << io::format_number(split_a) << "  reversed "
          << io::format_number(split_b) << "\n";
    return 0;
}

int cmd_moments(Ctx& x)
{
    const int t = need_t(x.cfg, "moments");
    const int n = x.cfg.n;
    CoinVector a = coin_from(x.cfg, "eigen:0");
    Positions pos = parse_positions(x.cfg.positions, n);
    MomentTable m = moment_table(t);
    io::Table per{{"i", "mean_x", "mean_x2"}, {}};
    io::Table pairs{{"j", "k", "pair_moment"}, {}};
    io::Series s{"<x_i^2>", {}, {}};
    for (int i = 1; i <= n; ++i) {
        const double v = mean_x2(m, a, i, pos);
        per.rows.push_back({double(i), mean_x(m, a, i, pos), v});
        s.x.push_back(i);
        s.y.push_back(v);
        x.out << "<x_" << i << "^2> = " << io::format_number(v) << "\n";
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            pairs.rows.push_back({double(j), double(k), pair_moment(m, a, j, k, pos)});
    const std::string stem = "moments_n" + std::to_string(n) + "_t" + std::to_string(t);
    x.table(stem + "_single", per);
    x.table(stem + "_pairs", pairs);
    x.summary(stem, {{"mean_distance", mean_distance(m, a, pos)}});
    x.svg(stem, io::svg_lines("second moments, t = " + std::to_string(t), "particle", "<x_i^2>", {s}));
    return 0;
}

int cmd_c2(Ctx& x)
{
    const int n = x.cfg.n;
    if (n < 2 || n > QuadraticForm::max_n)
        throw UsageError("c2 needs 2 <= n <= 14");
    CoinVector a = coin_from(x.cfg, "eigen:0");
    ordered_json j{{"c2", c2(a)}, {"eta_min", eta_min(n)}, {"eta_max", eta_max(n)}};
    x.out << "c2 = " << io::format_number(c2(a)) << "\n";
    if (x.cfg.t_max) {
        const int lo = x.cfg.t.value_or(100);
        DistanceCurve c = distance_curve(a, parse_positions(x.cfg.positions, n), lo, *x.cfg.t_max);
        j["fitted_c2"] = c.fitted_c2;
        x.out << "fitted_c2 = " << io::format_number(c.fitted_c2) << "\n";
    }
    x.summary("c2_n" + std::to_string(n), j, true);
    return 0;
}

int cmd_check(Ctx& x)
{
    auto res = run_acceptance(x.out);
    ordered_json arr = ordered_json::array();
    bool ok = true;
    for (auto& r : res) {
        arr.push_back({{"criterion", r.id}, {"pass", r.pass}, {"detail", r.detail}});
        ok = ok && r.pass;
    }
    x.summary("check", {{"criteria", arr}}, true);
    return ok ? 0 : 2;
}

} // namespace

unsigned long parse_index(const std::string& raw)
{
    const std::string s = trim(raw);
    if (s.size() >= 3 && s.front() == '(' && s.substr(s.size() - 2) == ")b") {
        const std::string b = s.substr(1, s.size() - 3);
        if (b.empty() || b.size() > 62 || b.find_first_not_of("01") != std::string::npos)
            throw UsageError("bad binary literal '" + s + "'");
        return std::stoul(b, nullptr, 2);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad index '" + s + "'");
    return std::stoul(s);
}

cplx parse_complex(const std::string& raw)
{
    std::string s = trim(raw);
    if (s.empty())
        throw UsageError("empty amplitude");
    if (s.back() != 'i' && s.back() != 'j')
        return {parse_real(s), 0};
    s.pop_back();
    // split at the last sign that is not an exponent sign
    size_t cut = std::string::npos;
    for (size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            cut = i;
            break;
        }
    auto imag = [](const std::string& p) {
        if (p.empty() || p == "+")
            return 1.0;
        if (p == "-")
            return -1.0;
        return parse_real(p);
    };
    if (cut == std::string::npos)
        return {0, imag(s)};
    return {parse_real(s.substr(0, cut)), imag(s.substr(cut))};
}

CoinVector parse_coin(const std::string& raw, int n)
{
    if (n < 1 || n > 24)
        throw UsageError("--n must be in 1..24");
    const std::string spec = trim(raw);
    if (spec.rfind("eigen:", 0) == 0) {
        const unsigned long k = parse_index(spec.substr(6));
        if (k >= (1UL << n))
            throw UsageError("eigenstate index does not fit in n bits");
        if (n > 20)
            throw UsageError("eigenstates are built for n <= 20");
        return eigenstate(n, k);
    }
    if (spec.rfind("basis:", 0) == 0) {
        const unsigned long xi = parse_index(spec.substr(6));
        if (xi >= (1UL << n))
            throw UsageError("basis index does not fit in n bits");
        return CoinVector::basis(n, xi);
    }
    if (spec == "up" || spec == "down") {
        if (n != 1)
            throw UsageError("'up'/'down' name a single coin");
        return CoinVector::basis(1, spec == "up" ? 1 : 0);
    }
    std::vector<cplx> amp;
    for (auto& p : split(spec, ','))
        amp.push_back(parse_complex(p));
    if (amp.size() != (1UL << n))
        throw UsageError("amplitude list needs 2^n = " + std::to_string(1UL << n) + " entries");
    double nn = 0;
    for (auto& v : amp)
        nn += std::norm(v);
    if (nn == 0)
        throw UsageError("amplitude list is zero");
    for (auto& v : amp)
        v /= std::sqrt(nn);
    return CoinVector(n, std::move(amp));
}

Positions parse_positions(const std::string& s, int n)
{
    if (trim(s).empty())
        return {};
    Positions p;
    for (auto& v : split(s, ',')) {
        const double d = parse_real(v);
        if (d != std::floor(d))
            throw UsageError("positions are lattice integers");
        p.push_back(static_cast<long>(d));
    }
    if (static_cast<int>(p.size()) != n)
        throw UsageError("--pos needs one entry per particle");
    return p;
}

int run_command(RunConfig cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.out.empty()) {
            const char* env = std::getenv("QWALK_OUT_DIR");
            cfg.out = env && *env ? env : ".";
        }
        for (auto& f : cfg.formats)
            if (f != "csv" && f != "json" && f != "svg")
                throw UsageError("unknown format '" + f + "'");
        if (cfg.n < 1)
            throw UsageError("--n must be positive");
        Ctx x{cfg, out, {}};
        x.echo["command"] = cfg.command;
        x.echo["n"] = cfg.n;
        if (cfg.t)
            x.echo["t"] = *cfg.t;
        if (cfg.t_max)
            x.echo["t_max"] = *cfg.t_max;
        if (!cfg.coin.empty())
            x.echo["coin"] = cfg.coin;
        if (cfg.k)
            x.echo["k"] = *cfg.k;
        if (!cfg.pair.empty())
            x.echo["pair"] = cfg.pair;
        if (!cfg.cut.empty())
            x.echo["cut"] = cfg.cut;
        if (!cfg.positions.empty())
            x.echo["positions"] = cfg.positions;
        if (cfg.command == "classical") {
            x.echo["trials"] = cfg.trials;
            x.echo["seed"] = cfg.seed;
        }

        const std::string& c = cfg.command;
        if (c == "single")
            return cmd_single(x);
        if (c == "distance")
            return cmd_distance(x);
        if (c == "classical")
            return cmd_classical(x);
        if (c == "spectrum")
            return cmd_spectrum(x);
        if (c == "symmetry")
            return cmd_symmetry(x);
        if (c == "entropy")
            return cmd_entropy(x);
        if (c == "jointdist")
            return cmd_jointdist(x);
        if (c == "moments")
            return cmd_moments(x);
        if (c == "c2")
            return cmd_c2(x);
        if (c == "check")
            return cmd_check(x);
        throw UsageError("unknown command '" + c + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qwalk
