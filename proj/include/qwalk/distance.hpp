#pragma once

#include "qwalk/multiparticle.hpp"

#include <cstdint>
#include <vector>

namespace qwalk {

// <D> with D = sum_i (x_i - mean)^2
//        = (n-1)/n sum_i x_i^2 - 1/n sum_{j != k} x_j x_k
double mean_distance(const MomentTable& m, const CoinVector& a, const Positions& pos = {});
double mean_distance(const CoinVector& a, const Positions& pos, int t);

struct DistanceCurve {
    std::vector<int> t;
    std::vector<double> d;
    double fitted_c2 = 0;
};

// samples every step in [t_lo, t_hi]; fitted_c2 from the least-squares
// fit of D/t^2 against {1, 1/t, 1/t^2}
DistanceCurve distance_curve(const CoinVector& a, const Positions& pos, int t_lo, int t_hi);
double fit_c2(const std::vector<int>& t, const std::vector<double>& d);

// unbiased +-1 walkers
double classical_baseline(int n, int t, const Positions& pos = {});

struct ClassicalSample {
    int t = 0;
    double mean = 0, stderr_ = 0;
};

// one trajectory set, recorded at every step up to t_max
std::vector<ClassicalSample> classical_monte_carlo(int n, int t_max, long trials, std::uint64_t seed,
                                                   const Positions& pos = {});
// OLS slope of mean D over [t_lo, t_hi]
double regression_slope(const std::vector<ClassicalSample>& s, int t_lo, int t_hi);

} // namespace qwalk
