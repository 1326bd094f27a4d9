#include "plim/grid.hpp"

#include <cmath>

namespace plim {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, Newton on P_n.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
            double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

SpectralGrid::SpectralGrid(const GridSpec& spec) : spec_(spec) {
    if (!(spec.k_max > 0.0) || spec.panels < 1 || spec.nodes_per_panel < 2)
        fail(Error::Code::domain, "invalid grid spec");

    std::vector<double> xr, wr;
    gauss_legendre(spec.nodes_per_panel, xr, wr);

    nodes_.reserve(static_cast<std::size_t>(spec.panels) * spec.nodes_per_panel);
    weights_.reserve(nodes_.capacity());

    double lo = 0.0;
    for (int p = 0; p < spec.panels; ++p) {
        double hi = spec.k_max * std::pow(2.0, static_cast<double>(p + 1 - spec.panels));
        if (p == spec.panels - 1) hi = spec.k_max;
        const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
        for (int i = 0; i < spec.nodes_per_panel; ++i) {
            nodes_.push_back(mid + half * xr[i]);
            weights_.push_back(half * wr[i]);
        }
        lo = hi;
    }

    if (calibration_error() > calibration_tol)
        fail(Error::Code::accuracy, "grid failed its calibration integral");
}

double SpectralGrid::integrate(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
    return acc;
}

double SpectralGrid::integrate_samples(std::span<const double> samples) const {
    if (samples.size() != nodes_.size())
        fail(Error::Code::domain, "sample count does not match grid");
    double acc = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) acc += weights_[i] * samples[i];
    return acc;
}

double SpectralGrid::calibration_error() const {
    // Int_0^inf k^2/(k^2+1)^2 dk = pi/4; the [k_max, inf) tail expands as
    // 1/T - 2/(3T^3) + 3/(5T^5) - ...
    double quad = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const double k = nodes_[i], d = k * k + 1.0;
        quad += weights_[i] * k * k / (d * d);
    }
    const double T = spec_.k_max;
    const double tail = 1.0 / T - 2.0 / (3.0 * T * T * T) + 3.0 / (5.0 * std::pow(T, 5));
    return std::abs(quad + tail - kPi / 4.0);
}

}  // namespace plim
