#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// adaptive Gauss-Kronrod over [-pi, pi]; the integrands here are smooth
// and 2pi-periodic so the estimate settles fast
template <class F>
std::complex<double> integrate_bz(F&& f, double tol = 1e-12, unsigned depth = 20)
{
    constexpr double pi = std::numbers::pi;
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err = 0, l1 = 0;
    // an integrand that is zero up to rounding never meets a relative target
    auto v = gk::integrate(f, -pi, pi, 0, tol, &err, &l1);
    if (l1 < 1e-13)
        return v;
    v = gk::integrate(f, -pi, pi, depth, tol, &err, &l1);
    if (err > std::max(1e3 * tol, 1e-9) * std::max(1.0, l1))
        throw QuadratureError("quadrature did not converge (error estimate " + std::to_string(err) + ")");
    return v;
}

// trapezoid rule on the periodic interval; exponentially accurate once
// npts exceeds the integrand's Fourier bandwidth
template <class F>
std::complex<double> integrate_periodic(F&& f, int npts)
{
    constexpr double pi = std::numbers::pi;
    std::complex<double> s = 0;
    double h = 2 * pi / npts;
    for (int j = 0; j < npts; ++j)
        s += f(-pi + j * h);
    return s * h;
}

} // namespace qwalk
