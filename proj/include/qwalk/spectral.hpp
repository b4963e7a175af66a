#pragma once

#include "qwalk/multiparticle.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace qwalk {

int hamming_weight(unsigned long i);
int hamming_distance(unsigned long i, unsigned long j);
int common_ones(unsigned long i, unsigned long j);

// 1 - 1/sqrt(2): the t^2 coefficient of <x^2> for one walker
double ballistic_constant();

// F(-1) = 1, F(0) = 0, F(a) = 2F(a-1) + F(a-2)
long long pell(int alpha);
using IntMat2 = std::array<std::array<long long, 2>, 2>;
// [[0,1],[1,2]]^alpha = [[F(a-1), F(a)], [F(a), F(a+1)]]
IntMat2 pell_power(int alpha);

// the quadratic form behind c2 on 2^n coin amplitudes
class QuadraticForm {
public:
    static constexpr int max_n = 14;
    static constexpr int max_dense_n = 12;

    explicit QuadraticForm(int n);

    int n() const { return n_; }
    long dim() const { return 1L << n_; }
    double entry(unsigned long i, unsigned long j) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::MatrixXd dense() const;

private:
    int n_;
};

QuadraticForm build_M(int n);

double eta(int n, unsigned long k);   // odd k reuses k-1
long mu(int n, unsigned long k);
double eta_min(int n);
double eta_max(int n);

struct SpectralEntry {
    unsigned long k = 0; // even
    int weight = 0;
    double eta = 0;
    long mu = 0;
    long degeneracy = 0; // of the eta value, after merging w and n-w
};

struct SpectralLevel {
    double eta = 0;
    long mu = 0;
    int w = 0; // representative weight, w <= n - w
    long degeneracy = 0;
};

struct SpectralTable {
    int n = 0;
    std::vector<SpectralEntry> entries; // every even k (n <= max_n)
    std::vector<SpectralLevel> levels;  // distinct values, ascending
};

SpectralTable analytic_spectrum(int n);
// distinct levels only; fine for large n
std::vector<SpectralLevel> spectrum_levels(int n);

// column k of the integer eigenvector matrix
std::vector<long long> eigenvector_P(int n, unsigned long k);
CoinVector eigenstate(int n, unsigned long k);

double c2(const CoinVector& a);

// ascending eigenvalues of the dense form
Eigen::VectorXd dense_spectrum(int n);

} // namespace qwalk
