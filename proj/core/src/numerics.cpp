#include "plim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plim {

RichardsonResult richardson_limit(const std::function<double(double)>& h, double rho0,
                                  int max_levels, double tol) {
    RichardsonResult res;
    std::vector<std::vector<double>> T;
    double prev_diag = 0.0;
    for (int i = 0; i < max_levels; ++i) {
        const double rho = rho0 * std::pow(0.5, i);
        std::vector<double> row(1, h(rho));
        // Neville-style elimination of successive integer powers of rho.
        for (int j = 1; j <= i; ++j) {
            const double f = std::pow(2.0, j);
            row.push_back((f * row[j - 1] - T[i - 1][j - 1]) / (f - 1.0));
        }
        T.push_back(row);
        res.value = row.back();
        res.levels = i + 1;
        if (i > 0) {
            res.spread = std::abs(row.back() - prev_diag);
            if (res.spread < tol) {
                res.converged = true;
                return res;
            }
        }
        prev_diag = row.back();
    }
    return res;
}

double fit_order(std::span<const double> r, std::span<const double> err) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] > 0.0 && err[i] > 0.0) {
            lx.push_back(std::log(r[i]));
            ly.push_back(std::log(err[i]));
        }
    }
    const std::size_t n = lx.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

double stencil_d1(std::span<const double> f, std::size_t i, double h) {
    return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}

double stencil_d2(std::span<const double> f, std::size_t i, double h) {
    return (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) /
           (12.0 * h * h);
}

double stencil_d3(std::span<const double> f, std::size_t i, double h) {
    return (-f[i + 3] + 8.0 * f[i + 2] - 13.0 * f[i + 1] + 13.0 * f[i - 1] - 8.0 * f[i - 2] +
            f[i - 3]) /
           (8.0 * h * h * h);
}

}  // namespace plim
