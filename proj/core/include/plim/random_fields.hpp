#pragma once

#include <cstdint>
#include <random>

#include "plim/nonrunaway.hpp"
#include "plim/sector_field.hpp"

namespace plim {

// Deterministic random field generation for property tests and the check
// suite. Profiles are smooth and rapidly decaying:
//   fhat(k) = (a0 + a1 k + a2 k^2) exp(-k^2 / (2 sigma^2)),
// with coefficients uniform in [-1,1] and sigma in [0.8, 2.0].
class FieldSampler {
  public:
    explicit FieldSampler(std::uint64_t seed, GridPtr grid) : rng_(seed), grid_(std::move(grid)) {}

    double uniform(double lo, double hi);
    RadialProfile random_profile();
    HybridSectorField random_regular();                        // three random axes
    HybridSectorField random_hybrid(int max_singular = 2);     // + singular terms
    NRPair random_pair();                                      // regular H^1 x L^2 pair

    const GridPtr& grid() const { return grid_; }

  private:
    std::mt19937_64 rng_;
    GridPtr grid_;
};

// Named closed-form profiles shipped with the library (used by the initial
// data families and by tests).
namespace profiles {
// ghat(k) = pi^(3/2) exp(-k^2/4): g(0) = 1.
double gaussian_unit(double k);
// ghat(k) = (6 - k^2) exp(-k^2/4): origin value g(0) = 0.
double gaussian_origin_null(double k);
}  // namespace profiles

}  // namespace plim
