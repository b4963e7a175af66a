#include "qwalk/distance.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <stdexcept>

namespace qwalk {

double mean_distance(const MomentTable& m, const CoinVector& a, const Positions& pos)
{
    const int n = a.n;
    if (n == 1)
        return 0;
    double sq = 0, cross = 0;
    for (int i = 1; i <= n; ++i)
        sq += mean_x2(m, a, i, pos);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            cross += 2 * pair_moment(m, a, j, k, pos);
    return (n - 1.0) / n * sq - cross / n;
}

double mean_distance(const CoinVector& a, const Positions& pos, int t)
{
    return mean_distance(moment_table(t), a, pos);
}

double fit_c2(const std::vector<int>& t, const std::vector<double>& d)
{
    std::vector<int> keep;
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] > 0)
            keep.push_back(static_cast<int>(i));
    if (keep.size() < 3)
        throw std::invalid_argument("need at least three positive times to fit c2");
    Eigen::MatrixXd A(keep.size(), 3);
    Eigen::VectorXd y(keep.size());
    for (size_t r = 0; r < keep.size(); ++r) {
        const double tt = t[keep[r]];
        A(r, 0) = 1;
        A(r, 1) = 1 / tt;
        A(r, 2) = 1 / (tt * tt);
        y(r) = d[keep[r]] / (tt * tt);
    }
    Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
    return coef(0);
}

DistanceCurve distance_curve(const CoinVector& a, const Positions& pos, int t_lo, int t_hi)
{
    if (t_lo < 0 || t_hi < t_lo)
        throw std::invalid_argument("empty time range");
    auto tables = moment_tables(t_hi);
    DistanceCurve c;
    for (int t = t_lo; t <= t_hi; ++t) {
        c.t.push_back(t);
        c.d.push_back(mean_distance(tables[t], a, pos));
    }
    int positive = 0;
    for (int t : c.t)
        positive += t > 0;
    if (positive >= 3)
        c.fitted_c2 = fit_c2(c.t, c.d);
    return c;
}

static double spread(const Positions& x)
{
    const double n = static_cast<double>(x.size());
    double s = 0, s2 = 0;
    for (long v : x) {
        s += static_cast<double>(v);
        s2 += static_cast<double>(v) * static_cast<double>(v);
    }
    // (n-1)/n sum x^2 - 1/n sum_{j!=k} x_j x_k
    return (n - 1) / n * s2 - (s * s - s2) / n;
}

double classical_baseline(int n, int t, const Positions& pos)
{
    if (n < 1 || t < 0)
        throw std::invalid_argument("need n >= 1 and t >= 0");
    Positions p = pos.empty() ? Positions(n, 0) : pos;
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("positions do not match particle count");
    return spread(p) + (n - 1.0) * t;
}

std::vector<ClassicalSample> classical_monte_carlo(int n, int t_max, long trials, std::uint64_t seed,
                                                   const Positions& pos)
{
    if (n < 1 || t_max < 0 || trials < 2)
        throw std::invalid_argument("need n >= 1, t >= 0 and at least two trials");
    Positions start = pos.empty() ? Positions(n, 0) : pos;
    if (static_cast<int>(start.size()) != n)
        throw std::invalid_argument("positions do not match particle count");

    // fixed blocks with their own streams keep the result independent of
    // the thread count
    constexpr long block = 1024;
    const long nblocks = (trials + block - 1) / block;
    std::vector<double> sum(nblocks * (t_max + 1), 0.0), sum2(nblocks * (t_max + 1), 0.0);

#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < nblocks; ++b) {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(b), 0x9e3779b9u};
        std::mt19937_64 rng(ss);
        std::vector<long> x(n);
        const long lo = b * block, hi = std::min(trials, lo + block);
        double* s1 = &sum[b * (t_max + 1)];
        double* s2 = &sum2[b * (t_max + 1)];
        for (long tr = lo; tr < hi; ++tr) {
            x = start;
            std::uint64_t bits = 0;
            int left = 0;
            for (int t = 0; t <= t_max; ++t) {
                if (t > 0)
                    for (int i = 0; i < n; ++i) {
                        if (left == 0) {
                            bits = rng();
                            left = 64;
                        }
                        x[i] += (bits & 1) ? 1 : -1;
                        bits >>= 1;
                        --left;
                    }
                double d = spread(x);
                s1[t] += d;
                s2[t] += d * d;
            }
        }
    }

    std::vector<ClassicalSample> out(t_max + 1);
    for (int t = 0; t <= t_max; ++t) {
        double a = 0, q = 0;
        for (long b = 0; b < nblocks; ++b) {
            a += sum[b * (t_max + 1) + t];
            q += sum2[b * (t_max + 1) + t];
        }
        const double N = static_cast<double>(trials);
        const double mean = a / N;
        const double var = std::max(0.0, (q - N * mean * mean) / (N - 1));
        out[t] = {t, mean, std::sqrt(var / N)};
    }
    return out;
}

double regression_slope(const std::vector<ClassicalSample>& s, int t_lo, int t_hi)
{
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& p : s) {
        if (p.t < t_lo || p.t > t_hi)
            continue;
        n += 1;
        sx += p.t;
        sy += p.mean;
        sxx += double(p.t) * p.t;
        sxy += p.t * p.mean;
    }
    if (n < 2)
        throw std::invalid_argument("need two samples for a slope");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace qwalk
