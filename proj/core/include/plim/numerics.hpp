#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "plim/errors.hpp"

namespace plim {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// sin(x)/x with series fallback near zero.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

// Spherical Bessel j1(x) = sin(x)/x^2 - cos(x)/x, series near zero.
inline double sph_j1(double x) {
    if (std::abs(x) < 1e-3) {
        double x2 = x * x;
        return x / 3.0 * (1.0 - x2 / 10.0 * (1.0 - x2 / 28.0));
    }
    return (std::sin(x) / x - std::cos(x)) / x;
}

// Richardson extrapolation of h(rho) as rho -> 0 on the geometric ladder
// rho_j = rho0 * 2^-j, assuming an error expansion in integer powers of rho.
// Returns the extrapolated limit; converged when two successive diagonal
// entries differ by less than tol.
struct RichardsonResult {
    double value = 0.0;
    double spread = 0.0;  // last diagonal difference
    bool converged = false;
    int levels = 0;
};
RichardsonResult richardson_limit(const std::function<double(double)>& h, double rho0,
                                  int max_levels, double tol);

// Least-squares slope of log|err| against log r (convergence-order fit).
// Returns NaN when fewer than two usable points remain.
double fit_order(std::span<const double> r, std::span<const double> err);

// Five-point centered first/second derivative and seven-point third
// derivative stencils on a uniform grid, all O(h^4).
double stencil_d1(std::span<const double> f, std::size_t i, double h);
double stencil_d2(std::span<const double> f, std::size_t i, double h);
double stencil_d3(std::span<const double> f, std::size_t i, double h);

}  // namespace plim
