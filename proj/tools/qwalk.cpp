#include "qwalk/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"multi-particle Hadamard walk toolkit"};
    app.require_subcommand(1);
    qwalk::RunConfig cfg;
    std::string format;

    auto add = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("--out", cfg.out, "output directory (default $QWALK_OUT_DIR or .)");
        s->add_option("--format", format, "csv, json, svg or a comma list");
        return s;
    };
    auto n_opt = [&](CLI::App* s) { s->add_option("--n", cfg.n, "particle count"); };
    auto t_opt = [&](CLI::App* s) { s->add_option("--t", cfg.t, "steps, or first step of a range"); };
    auto tmax_opt = [&](CLI::App* s) { s->add_option("--t-max", cfg.t_max, "last step of a range"); };
    auto coin_opt = [&](CLI::App* s) {
        s->add_option("--coin", cfg.coin, "eigen:<k>, basis:<xi>, up, down or an amplitude list");
        s->add_option("--pos", cfg.positions, "initial positions, comma list");
    };
    auto k_opt = [&](CLI::App* s) { s->add_option("--k", cfg.k, "eigenstate index, decimal or (1001010)b"); };

    auto* single = add("single", "one walker: position distribution");
    t_opt(single);
    coin_opt(single);

    auto* distance = add("distance", "average relative distance over a time range");
    n_opt(distance), t_opt(distance), tmax_opt(distance), coin_opt(distance), k_opt(distance);

    auto* classical = add("classical", "Monte-Carlo baseline with classical walkers");
    n_opt(classical), t_opt(classical);
    classical->add_option("--trials", cfg.trials, "trajectories");
    classical->add_option("--seed", cfg.seed, "generator seed");
    classical->add_option("--pos", cfg.positions, "initial positions, comma list");

    auto* spectrum = add("spectrum", "eigenvalues of M and their degeneracies");
    n_opt(spectrum);

    auto* symmetry = add("symmetry", "subgraph partition and preserving transpositions");
    n_opt(symmetry), k_opt(symmetry);

    auto* entropy = add("entropy", "Schmidt spectrum, or coin entropy over a time range");
    n_opt(entropy), k_opt(entropy), t_opt(entropy), tmax_opt(entropy);
    entropy->add_option("--coin", cfg.coin, "override the eigenstate");
    entropy->add_option("--cut", cfg.cut, "particle labels (default S_up)")->delimiter(',');

    auto* joint = add("jointdist", "two-particle position distribution");
    n_opt(joint), k_opt(joint), t_opt(joint), coin_opt(joint);
    joint->add_option("--pair", cfg.pair, "two particle labels")->delimiter(',');

    auto* moments = add("moments", "per-particle second moments and pair moments");
    n_opt(moments), k_opt(moments), t_opt(moments), coin_opt(moments);

    auto* c2 = add("c2", "quadratic form a^dagger M a, optionally against a fit");
    n_opt(c2), k_opt(c2), t_opt(c2), tmax_opt(c2), coin_opt(c2);

    add("check", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!format.empty()) {
        cfg.formats.clear();
        std::string cur;
        for (char c : format + ",") {
            if (c == ',') {
                if (!cur.empty())
                    cfg.formats.insert(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    return qwalk::run_command(cfg, std::cout, std::cerr);
}
