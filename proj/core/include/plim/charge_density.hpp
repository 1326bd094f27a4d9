#pragma once

#include <string>

#include "plim/errors.hpp"

namespace plim {

enum class DensityFamily { uniform_ball, polynomial_bump };

std::string to_string(DensityFamily f);
DensityFamily density_family_from_string(const std::string& name);

// Spherically symmetric probability density with support radius r and unit
// total charge. Both families are compactly supported, as the norm-resolvent
// limit requires; a Gaussian is deliberately not offered.
//
//   uniform_ball:     rho = 3/(4 pi r^3) on |x| <= r
//   polynomial_bump:  rho = 315/(64 pi r^3) (1 - (|x|/r)^2)^3, C^2 at |x| = r
//
// Fourier profiles are analytic and obey rhohat_r(k) = rhohat_1(r k),
// rhohat_r(0) = 1, |rhohat_r| <= 1.
struct ChargeDensity {
    DensityFamily family = DensityFamily::uniform_ball;
    double radius = 1.0;

    ChargeDensity() = default;
    ChargeDensity(DensityFamily f, double r) : family(f), radius(r) {
        if (!(r > 0.0)) fail(Error::Code::domain, "density radius must be positive");
    }

    // rhohat_1 of the unit-radius member of the family.
    static double unit_fourier(DensityFamily f, double t);

    // Envelope bound for |rhohat_1(t)| valid for t >= envelope_from(); used
    // by quadrature tail estimates.
    static double envelope(DensityFamily f, double t);
    static double envelope_from(DensityFamily f);

    // Exact [T, inf) tail of integral rhohat_1(t)^2 dt (leading terms); the
    // remainder is O(T^-4) for the ball and negligible for the bump.
    static double self_energy_tail(DensityFamily f, double T);

    double fourier(double k) const {
        if (k < 0.0) fail(Error::Code::domain, "fourier profile needs k >= 0");
        return unit_fourier(family, radius * k);
    }

    // Position-space value rho_r(s) at radius s (for oracles and diagnostics).
    double position(double s) const;
};

}  // namespace plim
