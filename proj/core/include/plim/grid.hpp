#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "plim/errors.hpp"
#include "plim/numerics.hpp"

namespace plim {

struct GridSpec {
    double k_max = 200.0;
    int panels = 32;
    int nodes_per_panel = 64;

    bool operator==(const GridSpec&) const = default;
};

// Composite Gauss-Legendre rule on [0, k_max] with geometrically shrinking
// panels toward k = 0: panel edges k_max * 2^(i-P). The fine panels resolve
// Lorentzian factors 1/(k^2 + lambda r^2) down to widths ~1e-7 without
// touching the smooth-profile accuracy at large k. Default spec gives 2048
// nodes.
class SpectralGrid {
  public:
    explicit SpectralGrid(const GridSpec& spec = {});

    const GridSpec& spec() const { return spec_; }
    double k_max() const { return spec_.k_max; }
    std::size_t size() const { return nodes_.size(); }
    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }
    double node(std::size_t i) const { return nodes_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }

    double integrate(const std::function<double(double)>& f) const;
    double integrate_samples(std::span<const double> samples) const;

    // Quadrature of k^2/(k^2+1)^2 plus the analytic [k_max, inf) tail versus
    // the exact pi/4; the constructor asserts this below calibration_tol.
    double calibration_error() const;
    static constexpr double calibration_tol = 1e-8;

    bool compatible(const SpectralGrid& other) const { return spec_ == other.spec_; }

  private:
    GridSpec spec_;
    std::vector<double> nodes_, weights_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

inline GridPtr make_grid(const GridSpec& spec = {}) {
    return std::make_shared<const SpectralGrid>(spec);
}

}  // namespace plim
