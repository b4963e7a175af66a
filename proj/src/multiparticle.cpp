#include "qwalk/multiparticle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

void check_particle(const CoinVector& a, int i)
{
    if (i < 1 || i > a.n)
        throw std::out_of_range("particle index " + std::to_string(i) + " outside 1.." + std::to_string(a.n));
}

Positions fill_positions(const Positions& pos, int n)
{
    if (pos.empty())
        return Positions(n, 0);
    if (static_cast<int>(pos.size()) != n)
        throw std::invalid_argument("positions do not match particle count");
    return pos;
}

double real_checked(cplx v, const char* what)
{
    if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real())))
        throw std::logic_error(std::string(what) + ": imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

inline unsigned long with_bit(unsigned long xi, int b, int v)
{
    return v ? (xi | (1UL << b)) : (xi & ~(1UL << b));
}

// Psi(A-bits, rest) so that the subset density is Psi Psi^dagger;
// subset[0] becomes the most significant reduced bit
Eigen::MatrixXcd cut_matrix(const CoinVector& a, const std::vector<int>& subset)
{
    const int m = static_cast<int>(subset.size());
    std::vector<int> rest;
    for (int i = 1; i <= a.n; ++i) {
        bool in = false;
        for (int q : subset)
            in = in || q == i;
        if (!in)
            rest.push_back(i);
    }
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(1L << m, 1L << rest.size());
    for (unsigned long xi = 0; xi < a.dim(); ++xi) {
        long r = 0, c = 0;
        for (int q : subset)
            r = (r << 1) | a.coin_of(xi, q);
        for (int q : rest)
            c = (c << 1) | a.coin_of(xi, q);
        psi(r, c) = a.amp[xi];
    }
    return psi;
}

void check_subset(const CoinVector& a, const std::vector<int>& subset, bool allow_full)
{
    if (subset.empty())
        throw std::invalid_argument("empty particle subset");
    if (!allow_full && static_cast<int>(subset.size()) >= a.n)
        throw std::invalid_argument("subset must be a proper subset of the particles");
    for (size_t x = 0; x < subset.size(); ++x) {
        check_particle(a, subset[x]);
        for (size_t y = 0; y < x; ++y)
            if (subset[x] == subset[y])
                throw std::invalid_argument("repeated particle in subset");
    }
}

} // namespace

CoinVector::CoinVector(int n_, std::vector<cplx> a) : n(n_), amp(std::move(a))
{
    if (n < 1 || n > 24)
        throw std::invalid_argument("particle count out of range");
    if (amp.size() != (1UL << n))
        throw std::invalid_argument("coin vector length must be 2^n");
    double s = 0;
    for (auto& z : amp)
        s += std::norm(z);
    if (std::abs(s - 1) > 1e-9)
        throw std::invalid_argument("coin vector is not normalized");
}

CoinVector CoinVector::basis(int n, unsigned long xi)
{
    if (n < 1 || n > 24 || xi >= (1UL << n))
        throw std::invalid_argument("basis index out of range");
    std::vector<cplx> v(1UL << n, 0);
    v[xi] = 1;
    return CoinVector(n, std::move(v));
}

CoinVector CoinVector::from_real(int n, const std::vector<double>& v)
{
    double s = 0;
    for (double x : v)
        s += x * x;
    if (s == 0)
        throw std::invalid_argument("zero vector");
    std::vector<cplx> a(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        a[i] = v[i] / std::sqrt(s);
    return CoinVector(n, std::move(a));
}

static MomentTable table_from(const WalkerWave& wd, const WalkerWave& wu)
{
    const WalkerWave* w[2] = {&wd, &wu};
    MomentTable m;
    m.t = wd.steps;
    for (long o = -m.t; o <= m.t; ++o) {
        const double x = static_cast<double>(o);
        for (int sp = 0; sp < 2; ++sp)
            for (int s = 0; s < 2; ++s) {
                cplx same = 0;
                for (int c = 0; c < 2; ++c)
                    same += std::conj(w[sp]->at(o, c)) * w[s]->at(o, c);
                m.X[sp][s] += x * same;
                m.X2[sp][s] += x * x * same;
                for (int cp = 0; cp < 2; ++cp)
                    for (int c = 0; c < 2; ++c)
                        m.T[cp][c][sp][s] += std::conj(w[sp]->at(o, cp)) * w[s]->at(o, c);
            }
    }
    return m;
}

MomentTable moment_table(int t) { return table_from(evolve(down, t), evolve(up, t)); }

std::vector<MomentTable> moment_tables(int t_max)
{
    if (t_max < 0)
        throw std::invalid_argument("negative step count");
    std::vector<MomentTable> out;
    out.reserve(t_max + 1);
    WalkerWave wd = initial_wave(coin_basis(down)), wu = initial_wave(coin_basis(up));
    out.push_back(table_from(wd, wu));
    for (int t = 1; t <= t_max; ++t) {
        wd = step(wd);
        wu = step(wu);
        out.push_back(table_from(wd, wu));
    }
    return out;
}

Mat2 shifted_x(const MomentTable& m, long x0)
{
    Mat2 r = m.X;
    r[0][0] += static_cast<double>(x0);
    r[1][1] += static_cast<double>(x0);
    return r;
}

Mat2 shifted_x2(const MomentTable& m, long x0)
{
    const double x = static_cast<double>(x0);
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            r[a][b] = m.X2[a][b] + 2 * x * m.X[a][b] + (a == b ? x * x : 0.0);
    return r;
}

static double one_body(const Mat2& op, const CoinVector& a, int i)
{
    const int b = a.bit_of(i);
    cplx acc = 0;
    for (unsigned long xi = 0; xi < a.dim(); ++xi) {
        if (a.amp[xi] == 0.0)
            continue;
        const int s = a.coin_of(xi, i);
        for (int sp = 0; sp < 2; ++sp)
            acc += std::conj(a.amp[with_bit(xi, b, sp)]) * a.amp[xi] * op[sp][s];
    }
    return real_checked(acc, "one-body moment");
}

double mean_x(const MomentTable& m, const CoinVector& a, int i, const Positions& pos)
{
    check_particle(a, i);
    Positions p = fill_positions(pos, a.n);
    return one_body(shifted_x(m, p[i - 1]), a, i);
}

double mean_x2(const MomentTable& m, const CoinVector& a, int i, const Positions& pos)
{
    check_particle(a, i);
    Positions p = fill_positions(pos, a.n);
    return one_body(shifted_x2(m, p[i - 1]), a, i);
}

double pair_moment(const MomentTable& m, const CoinVector& a, int j, int k, const Positions& pos)
{
    check_particle(a, j);
    check_particle(a, k);
    if (j == k)
        throw std::invalid_argument("pair_moment needs two distinct particles; use mean_x2");
    Positions p = fill_positions(pos, a.n);
    const Mat2 xj = shifted_x(m, p[j - 1]), xk = shifted_x(m, p[k - 1]);
    const int bj = a.bit_of(j), bk = a.bit_of(k);
    cplx acc = 0;
    for (unsigned long xi = 0; xi < a.dim(); ++xi) {
        if (a.amp[xi] == 0.0)
            continue;
        const int sj = a.coin_of(xi, j), sk = a.coin_of(xi, k);
        for (int pj = 0; pj < 2; ++pj)
            for (int pk = 0; pk < 2; ++pk) {
                unsigned long xp = with_bit(with_bit(xi, bj, pj), bk, pk);
                acc += std::conj(a.amp[xp]) * a.amp[xi] * xj[pj][sj] * xk[pk][sk];
            }
    }
    return real_checked(acc, "pair moment");
}

double mean_x(int i, const CoinVector& a, int t) { return mean_x(moment_table(t), a, i); }
double mean_x2(int i, const CoinVector& a, int t) { return mean_x2(moment_table(t), a, i); }
double pair_moment(int j, int k, const CoinVector& a, int t) { return pair_moment(moment_table(t), a, j, k); }

double JointDistribution::at(long a, long b) const
{
    long r = a - lo_a, c = b - lo_b;
    if (r < 0 || c < 0 || r >= size || c >= size)
        return 0;
    return p[r * size + c];
}

double JointDistribution::total() const
{
    double s = 0;
    for (double v : p)
        s += v;
    return s;
}

JointDistribution joint_distribution(int j, int k, const CoinVector& a, int t, const Positions& pos)
{
    check_particle(a, j);
    check_particle(a, k);
    if (j == k)
        throw std::invalid_argument("joint distribution needs two distinct particles");
    Positions p = fill_positions(pos, a.n);
    const WalkerWave wd = evolve(down, t), wu = evolve(up, t);
    const WalkerWave* w[2] = {&wd, &wu};

    // per-site overlaps O(x)[s'][s]
    const long size = 2L * t + 1;
    std::vector<Mat2> ov(size);
    for (long o = -t; o <= t; ++o)
        for (int sp = 0; sp < 2; ++sp)
            for (int s = 0; s < 2; ++s) {
                cplx v = 0;
                for (int c = 0; c < 2; ++c)
                    v += std::conj(w[sp]->at(o, c)) * w[s]->at(o, c);
                ov[o + t][sp][s] = v;
            }

    Eigen::MatrixXcd rho = partial_coin_density(a, {j, k}); // index (s_j << 1) | s_k

    JointDistribution jd;
    jd.j = j;
    jd.k = k;
    jd.t = t;
    jd.size = size;
    jd.lo_a = p[j - 1] - t;
    jd.lo_b = p[k - 1] - t;
    jd.p.assign(size * size, 0.0);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < size; ++r) {
        for (long c = 0; c < size; ++c) {
            cplx v = 0;
            for (int ket = 0; ket < 4; ++ket)
                for (int bra = 0; bra < 4; ++bra) {
                    cplx rv = rho(ket, bra);
                    if (rv == 0.0)
                        continue;
                    v += rv * ov[r][bra >> 1][ket >> 1] * ov[c][bra & 1][ket & 1];
                }
            jd.p[r * size + c] = real_checked(v, "joint probability");
        }
    }
    return jd;
}

Eigen::MatrixXcd partial_coin_density(const CoinVector& a, const std::vector<int>& subset)
{
    check_subset(a, subset, true);
    Eigen::MatrixXcd psi = cut_matrix(a, subset);
    return psi * psi.adjoint();
}

Eigen::MatrixXcd reduced_coin_density(const CoinVector& a, const MomentTable& m, const std::vector<int>& subset)
{
    check_subset(a, subset, false);
    Eigen::MatrixXcd rho = partial_coin_density(a, subset);
    const int q = static_cast<int>(subset.size());
    const long dim = 1L << q;
    // apply the single-particle coin channel qubit by qubit
    for (int slot = 0; slot < q; ++slot) {
        const int b = q - 1 - slot;
        Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(dim, dim);
        for (long r = 0; r < dim; ++r)
            for (long col = 0; col < dim; ++col) {
                const cplx v = rho(r, col);
                if (v == 0.0)
                    continue;
                const int s = (r >> b) & 1, sp = (col >> b) & 1;
                for (int c = 0; c < 2; ++c)
                    for (int cp = 0; cp < 2; ++cp) {
                        long r2 = c ? (r | (1L << b)) : (r & ~(1L << b));
                        long c2 = cp ? (col | (1L << b)) : (col & ~(1L << b));
                        next(r2, c2) += v * m.T[cp][c][sp][s];
                    }
            }
        rho.swap(next);
    }
    return rho;
}

Eigen::MatrixXcd reduced_coin_density(const CoinVector& a, int t, const std::vector<int>& subset)
{
    return reduced_coin_density(a, moment_table(t), subset);
}

// ---- brute force -------------------------------------------------------

BruteForceState::BruteForceState(const CoinVector& a, int t, const Positions& pos)
    : n_(a.n), t_(t), L_(2L * (2L * t + 1)), pos_(fill_positions(pos, a.n))
{
    if (n_ > max_particles || t_ > max_steps || t_ < 0)
        throw std::invalid_argument("brute-force state limited to n <= 3, 0 <= t <= 12");
    long total = 1;
    for (int i = 0; i < n_; ++i)
        total *= L_;
    psi_.assign(total, 0);
    for (unsigned long xi = 0; xi < a.dim(); ++xi) {
        long idx = 0;
        for (int i = 1; i <= n_; ++i)
            idx += (2L * t_ + a.coin_of(xi, i)) * stride(i); // offset 0 sits at local 2t
        psi_[idx] = a.amp[xi];
    }
    for (int s = 0; s < t_; ++s)
        for (int i = 1; i <= n_; ++i)
            step_axis(i, s);
}

long BruteForceState::stride(int i) const
{
    long s = 1;
    for (int q = i + 1; q <= n_; ++q)
        s *= L_;
    return s;
}

void BruteForceState::step_axis(int i, int)
{
    const double r = 1.0 / std::numbers::sqrt2;
    const long st = stride(i);
    std::vector<cplx> out(psi_.size(), 0);
    const long span = 2L * t_ + 1;
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx) {
        const long local = (idx / st) % L_;
        const long o = local / 2;
        const int c = static_cast<int>(local % 2);
        const long base = idx - local * st;
        cplx v = 0;
        if (c == up && o - 1 >= 0) {
            long src = base + (2 * (o - 1)) * st;
            v = (psi_[src + up * st] + psi_[src + down * st]) * r;
        } else if (c == down && o + 1 < span) {
            long src = base + (2 * (o + 1)) * st;
            v = (psi_[src + up * st] - psi_[src + down * st]) * r;
        }
        out[idx] = v;
    }
    psi_.swap(out);
}

double BruteForceState::norm2() const
{
    double s = 0;
    for (auto& z : psi_)
        s += std::norm(z);
    return s;
}

double BruteForceState::mean_x(int i) const
{
    double s = 0;
    const long st = stride(i);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx)
        s += std::norm(psi_[idx]) * static_cast<double>(site(i, (idx / st) % L_));
    return s;
}

double BruteForceState::mean_x2(int i) const
{
    double s = 0;
    const long st = stride(i);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx) {
        double x = static_cast<double>(site(i, (idx / st) % L_));
        s += std::norm(psi_[idx]) * x * x;
    }
    return s;
}

double BruteForceState::pair_moment(int j, int k) const
{
    double s = 0;
    const long sj = stride(j), sk = stride(k);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx)
        s += std::norm(psi_[idx]) * static_cast<double>(site(j, (idx / sj) % L_)) *
             static_cast<double>(site(k, (idx / sk) % L_));
    return s;
}

double BruteForceState::mean_distance() const
{
    double s = 0;
    std::vector<double> x(n_);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx) {
        double w = std::norm(psi_[idx]);
        if (w == 0)
            continue;
        double mean = 0;
        for (int i = 1; i <= n_; ++i) {
            x[i - 1] = static_cast<double>(site(i, (idx / stride(i)) % L_));
            mean += x[i - 1];
        }
        mean /= n_;
        double d = 0;
        for (double v : x)
            d += (v - mean) * (v - mean);
        s += w * d;
    }
    return s;
}

JointDistribution BruteForceState::joint_distribution(int j, int k) const
{
    JointDistribution jd;
    jd.j = j;
    jd.k = k;
    jd.t = t_;
    jd.size = 2L * t_ + 1;
    jd.lo_a = pos_[j - 1] - t_;
    jd.lo_b = pos_[k - 1] - t_;
    jd.p.assign(jd.size * jd.size, 0.0);
    const long sj = stride(j), sk = stride(k);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx) {
        long oa = ((idx / sj) % L_) / 2, ob = ((idx / sk) % L_) / 2;
        jd.p[oa * jd.size + ob] += std::norm(psi_[idx]);
    }
    return jd;
}

Eigen::MatrixXcd BruteForceState::coin_density(const std::vector<int>& subset) const
{
    const int q = static_cast<int>(subset.size());
    const long cols = static_cast<long>(psi_.size()) >> q;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1L << q, cols);
    // rows: subset coins; columns: everything else in a fixed enumeration
    std::vector<long> fill(1L << q, 0);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx) {
        long row = 0, col = 0;
        for (int i = 1; i <= n_; ++i) {
            long local = (idx / stride(i)) % L_;
            bool in = false;
            for (int x : subset)
                in = in || x == i;
            if (in) {
                row = (row << 1) | (local % 2);
                col = col * (L_ / 2) + local / 2;
            } else {
                col = col * L_ + local;
            }
        }
        m(row, col) = psi_[idx];
    }
    return m * m.adjoint();
}

Eigen::MatrixXcd BruteForceState::particle_density(int i) const
{
    const long st = stride(i);
    const long cols = static_cast<long>(psi_.size()) / L_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(L_, cols);
    for (long idx = 0; idx < static_cast<long>(psi_.size()); ++idx) {
        long local = (idx / st) % L_;
        long rest = (idx / (st * L_)) * st + idx % st;
        m(local, rest) = psi_[idx];
    }
    return m * m.adjoint();
}

} // namespace qwalk
