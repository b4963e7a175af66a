#pragma once

#include "qwalk/multiparticle.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

// bad flags or inconsistent values; maps to exit code 1
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    int n = 1;
    std::optional<int> t;     // a single time, or the start of a range
    std::optional<int> t_max; // end of a range
    std::string coin;         // eigen:<k> | basis:<xi> | up | down | amplitude list
    std::optional<std::string> k;
    std::vector<int> pair;
    std::vector<int> cut;
    std::string positions; // comma list, empty = all at the origin
    long trials = 100000;
    std::uint64_t seed = 20240601;
    std::filesystem::path out;
    std::set<std::string> formats{"csv"};
};

// decimal or "(1001010)b"
unsigned long parse_index(const std::string& s);
// "0.5", "-i", "1+2i", "0.3-0.1i"
cplx parse_complex(const std::string& s);
CoinVector parse_coin(const std::string& spec, int n);
Positions parse_positions(const std::string& s, int n);

// resolves out directory, validates the config and runs; returns the exit code
int run_command(RunConfig cfg, std::ostream& out, std::ostream& err);

} // namespace qwalk
