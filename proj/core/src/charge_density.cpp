#include "plim/charge_density.hpp"

#include <cmath>

#include "plim/numerics.hpp"

namespace plim {

std::string to_string(DensityFamily f) {
    return f == DensityFamily::uniform_ball ? "uniform_ball" : "polynomial_bump";
}

DensityFamily density_family_from_string(const std::string& name) {
    if (name == "uniform_ball" || name == "ball") return DensityFamily::uniform_ball;
    if (name == "polynomial_bump" || name == "bump") return DensityFamily::polynomial_bump;
    fail(Error::Code::domain, "unknown density family: " + name);
}

namespace {

// Ball: 3 (sin t - t cos t)/t^3. The closed form cancels badly below
// t ~ 0.5, where the Taylor series takes over.
double ball_fourier(double t) {
    if (t < 0.5) {
        const double t2 = t * t;
        // 1 - t^2/10 + t^4/280 - t^6/15120 + t^8/1330560 - t^10/172972800
        return 1.0 +
               t2 * (-1.0 / 10.0 +
                     t2 * (1.0 / 280.0 +
                           t2 * (-1.0 / 15120.0 +
                                 t2 * (1.0 / 1330560.0 - t2 / 172972800.0))));
    }
    return 3.0 * (std::sin(t) - t * std::cos(t)) / (t * t * t);
}

// Bump: 945 (t^4 sin t + 10 t^3 cos t - 45 t^2 sin t - 105 t cos t + 105 sin t)/t^9.
double bump_fourier(double t) {
    if (t < 1.0) {
        const double t2 = t * t;
        // 1 - t^2/22 + t^4/1144 - t^6/102960 + t^8/14002560 - t^10/2660486400
        return 1.0 +
               t2 * (-1.0 / 22.0 +
                     t2 * (1.0 / 1144.0 +
                           t2 * (-1.0 / 102960.0 +
                                 t2 * (1.0 / 14002560.0 - t2 / 2660486400.0))));
    }
    const double s = std::sin(t), c = std::cos(t);
    const double t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    return 945.0 * (t4 * s + 10.0 * t3 * c - 45.0 * t2 * s - 105.0 * t * c + 105.0 * s) /
           (t4 * t4 * t);
}

}  // namespace

double ChargeDensity::unit_fourier(DensityFamily f, double t) {
    return f == DensityFamily::uniform_ball ? ball_fourier(t) : bump_fourier(t);
}

double ChargeDensity::envelope(DensityFamily f, double t) {
    if (f == DensityFamily::uniform_ball) return 3.0 * (1.0 + t) / (t * t * t);
    // 945 (t^4 + 10 t^3 + 45 t^2 + 105 t + 105)/t^9 <= 1040/t^5 for t >= 100.
    return 945.0 * (t * t * t * t + 10.0 * t * t * t + 45.0 * t * t + 105.0 * t + 105.0) /
           std::pow(t, 9);
}

double ChargeDensity::envelope_from(DensityFamily) { return 10.0; }

double ChargeDensity::self_energy_tail(DensityFamily f, double T) {
    if (f == DensityFamily::uniform_ball) {
        // rhohat^2 = 9 cos^2/t^4 - 9 sin(2t)/t^5 + 9 sin^2/t^6; the T^-5
        // oscillatory pieces cancel and the remainder is O(T^-6).
        const double s2 = std::sin(2.0 * T);
        return 1.5 / (T * T * T) - 2.25 * s2 / (T * T * T * T) + 0.9 / std::pow(T, 5);
    }
    // Bump tail is below 1e-12 for any T >= 60; bound by the envelope.
    const double env = envelope(f, T);
    return env * env * T / 9.0;  // Int_T^inf (C/t^5)^2 dt = C^2/(9 T^9) = env(T)^2 T / 9
}

double ChargeDensity::position(double s) const {
    const double u = s / radius;
    if (u > 1.0) return 0.0;
    const double r3 = radius * radius * radius;
    if (family == DensityFamily::uniform_ball) return 3.0 / (4.0 * kPi * r3);
    const double w = 1.0 - u * u;
    return 315.0 / (64.0 * kPi * r3) * w * w * w;
}

}  // namespace plim
