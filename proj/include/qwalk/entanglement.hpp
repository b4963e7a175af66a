#pragma once

#include "qwalk/multiparticle.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace qwalk {

struct SchmidtData {
    std::vector<int> cut; // 1-based particle labels
    std::vector<double> nu; // descending
    double entropy = 0;     // bits
};

// reduced density of the cut by reshaping the amplitudes into a
// (cut) x (rest) matrix; throws on an empty or full cut
SchmidtData schmidt(const CoinVector& a, const std::vector<int>& cut);

double entropy_bits(const std::vector<double>& nu);

// (nu1, nu2) of an eigenstate across its two subgraphs. The exponent of
// 3-2sqrt2 is n-2 for even k and n for odd k.
std::pair<double, double> nu_closed_form(int n, bool odd_k);
int nu_exponent(int n, bool odd_k);

// a + b*sqrt(2) with integer parts
struct RootTwo {
    long long a = 0, b = 0;

    RootTwo operator+(const RootTwo& o) const { return {a + o.a, b + o.b}; }
    RootTwo operator*(const RootTwo& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
    RootTwo operator*(long long s) const { return {a * s, b * s}; }
    bool operator==(const RootTwo& o) const = default;
    double value() const;
};
RootTwo pow(RootTwo x, int e);

// sum_w (1+sqrt2)^(2w) C(m,w) and (4+2sqrt2)^m, both exact
RootTwo weighted_binomial_sum(int m);
RootTwo normalization_power(int m);

// eigenstate k written as c1 |A1>|B1> + c2 |A2>|B2> over the symmetric
// (occupation) bases of its two subgraphs. A is the side holding particle
// n; entry w of an A vector is the amplitude of "w coins up on A".
struct FockForm {
    int n = 0;
    unsigned long k = 0;
    std::vector<int> side_a, side_b;
    double c1 = 0, c2 = 0;
    Eigen::VectorXd a1, a2, b1, b2; // normalized; b* empty when B is empty
    int rank() const { return side_b.empty() ? 1 : 2; }

    // back to 2^n amplitudes; unit norm
    Eigen::VectorXd expand() const;
};

FockForm build_eigenstate_fock(int n, unsigned long k);

} // namespace qwalk
