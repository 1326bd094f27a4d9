#include "plim/kernels.hpp"

#include <cmath>

namespace plim {

double lambda0(const PhysParams& p) {
    p.require_charged();
    const double s = 3.0 * p.m * p.c * p.c / (2.0 * p.e * p.e);
    return s * s;
}

double gamma_m(double lambda, const PhysParams& p) {
    p.require_charged();
    if (lambda < 0.0) fail(Error::Code::domain, "gamma_m needs lambda >= 0");
    return -p.m * p.c * p.c / (4.0 * kPi * p.e * p.e) + std::sqrt(lambda) / (6.0 * kPi);
}

double green_eval(double lambda, double radius) {
    if (lambda < 0.0) fail(Error::Code::domain, "green_eval needs lambda >= 0");
    if (!(radius > 0.0)) fail(Error::Code::singular_point, "G_lambda is singular at radius 0");
    return std::exp(-std::sqrt(lambda) * radius) / (4.0 * kPi * radius);
}

double green_inner(double lambda, double mu) {
    if (!(lambda > 0.0) || !(mu > 0.0))
        fail(Error::Code::domain, "green_inner needs positive scales");
    return 1.0 / (4.0 * kPi * (std::sqrt(lambda) + std::sqrt(mu)));
}

double charge_fourier(const ChargeDensity& density, double k) { return density.fourier(k); }

double self_energy(const ChargeDensity& density, const SpectralGrid& grid) {
    // E(rho_r) = E(rho_1)/r; the unit-family integral runs over t = r k on
    // the standard grid with the analytic [k_max, inf) tail.
    const DensityFamily f = density.family;
    double quad = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double rh = ChargeDensity::unit_fourier(f, grid.node(i));
        quad += grid.weight(i) * rh * rh;
    }
    const double e1 = (quad + ChargeDensity::self_energy_tail(f, grid.k_max())) /
                      (2.0 * kPi * kPi);
    return e1 / density.radius;
}

double renormalized_mass(const PhysParams& p, const ChargeDensity& density,
                         const SpectralGrid& grid, double eps) {
    p.validate();
    const double mr =
        p.m - 8.0 * kPi * p.e * p.e / (3.0 * p.c * p.c) * self_energy(density, grid);
    if (std::abs(mr) < eps)
        fail(Error::Code::near_zero_mass,
             "bare mass m_r is within eps of zero; dynamics ill-conditioned");
    return mr;
}

double resolvent_pairing(double lambda, const ChargeDensity& density, const SpectralGrid& grid) {
    if (lambda < 0.0) fail(Error::Code::domain, "resolvent pairing needs lambda >= 0");
    // <(-Delta+lambda)^-1 rho_r, rho_r> = (1/2 pi^2)(1/r) Int t^2 rhohat_1(t)^2/(t^2 + lambda r^2) dt
    const double r = density.radius, a = lambda * r * r;
    double quad = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.node(i);
        const double rh = ChargeDensity::unit_fourier(density.family, t);
        quad += grid.weight(i) * t * t * rh * rh / (t * t + a);
    }
    // Tail <= Int_T rhohat^2 dt, already O(T^-3).
    quad += ChargeDensity::self_energy_tail(density.family, grid.k_max());
    return quad / (2.0 * kPi * kPi * r);
}

double gamma_r(double lambda, const ChargeDensity& density, const PhysParams& p,
               const SpectralGrid& grid, double tail_tol) {
    p.require_charged();
    if (lambda < 0.0) fail(Error::Code::domain, "gamma_r needs lambda >= 0");
    // Cancelled form: Gamma_r(lambda) = Gamma_m(0) + (2/3)(1/2 pi^2) Int lambda rhohat_r^2/(k^2+lambda) dk,
    // with the integral in the scaled variable t = r k:
    //   Int = lambda r Int rhohat_1(t)^2/(t^2 + lambda r^2) dt.
    const double r = density.radius, a = lambda * r * r;
    double quad = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.node(i);
        const double rh = ChargeDensity::unit_fourier(density.family, t);
        quad += grid.weight(i) * rh * rh / (t * t + a);
    }
    const double T = grid.k_max();
    const double env = ChargeDensity::envelope(density.family, T);
    const double tail_bound = lambda * r * env * env / T / (2.0 * kPi * kPi);
    if (tail_bound > tail_tol)
        fail(Error::Code::accuracy, "gamma_r quadrature tail exceeds tolerance");
    return gamma_m(0.0, p) + (2.0 / 3.0) * lambda * r * quad / (2.0 * kPi * kPi);
}

double test_profile_fourier(double k) {
    return std::pow(kPi, 1.5) * std::exp(-0.25 * k * k);
}

LimitDiagnostics limit_diagnostics(std::span<const double> r_list, double lambda,
                                   const PhysParams& p, DensityFamily family,
                                   const SpectralGrid& grid) {
    p.require_charged();
    if (r_list.empty()) fail(Error::Code::domain, "limit_diagnostics needs a nonempty r list");
    for (std::size_t i = 1; i < r_list.size(); ++i)
        if (!(r_list[i] < r_list[i - 1]))
            fail(Error::Code::domain, "limit_diagnostics r list must decrease");

    LimitDiagnostics out;
    out.gamma_m = gamma_m(lambda, p);
    out.resolvent_limit = -3.0 * p.c * p.c / (8.0 * kPi * p.e * p.e);

    for (double r : r_list) {
        ChargeDensity density(family, r);
        const double mr = renormalized_mass(p, density, grid);
        LimitDiagnosticsRow row;
        row.r = r;
        row.gamma_r = gamma_r(lambda, density, p, grid);
        row.gamma_diff = row.gamma_r - out.gamma_m;
        // <rho_r, (-Delta+lambda)^-1/2 X> with the shipped Gaussian X; the
        // profile kills the tail, so the unscaled grid is adequate.
        double pairing = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double k = grid.node(i);
            pairing += grid.weight(i) * k * k * density.fourier(k) * test_profile_fourier(k) /
                       std::sqrt(k * k + lambda);
        }
        pairing /= 2.0 * kPi * kPi;
        row.pairing_over_mr = pairing / mr;
        row.resolvent_over_mr = resolvent_pairing(lambda, density, grid) / mr;
        out.rows.push_back(row);
    }

    // Linear-order Richardson along the ladder (consecutive pairs).
    auto extrapolate = [&](auto get) {
        if (out.rows.size() < 2) return get(out.rows.back());
        const auto& a = out.rows[out.rows.size() - 2];
        const auto& b = out.rows.back();
        const double f = a.r / b.r;
        return (f * get(b) - get(a)) / (f - 1.0);
    };
    out.gamma_extrapolated =
        out.gamma_m + extrapolate([](const LimitDiagnosticsRow& x) { return x.gamma_diff; });
    out.resolvent_extrapolated =
        extrapolate([](const LimitDiagnosticsRow& x) { return x.resolvent_over_mr; });
    return out;
}

}  // namespace plim
