#pragma once

#include <span>
#include <vector>

#include "plim/charge_density.hpp"
#include "plim/grid.hpp"
#include "plim/params.hpp"

namespace plim {

// Scalar kernel objects: Green functions, Gamma functions, self-energy and
// mass renormalization, and the small-r limit diagnostics.
//
// Radial Fourier convention used everywhere in this project:
//   fhat(k) = 4 pi Int r^2 f(r) sin(kr)/(kr) dr,
//   <f,g>   = (1/2 pi^2) Int k^2 fhat(k) ghat(k) dk,
// so that the Yukawa kernel G_lambda(x) = exp(-sqrt(lambda)|x|)/(4 pi |x|)
// has profile 1/(k^2 + lambda).

// Magnitude of the unique negative eigenvalue: (3 m c^2 / 2 e^2)^2.
double lambda0(const PhysParams& p);

// Gamma_m(lambda) = -m c^2/(4 pi e^2) + sqrt(lambda)/(6 pi).
// Vanishes exactly at lambda0; strictly increasing on [0, inf).
double gamma_m(double lambda, const PhysParams& p);

// G_lambda evaluated at |x| = radius > 0.
double green_eval(double lambda, double radius);

// L^2 product <G_lambda, G_mu> = 1/(4 pi (sqrt(lambda) + sqrt(mu))).
double green_inner(double lambda, double mu);

// rhohat_r(k); convenience forwarding to ChargeDensity.
double charge_fourier(const ChargeDensity& density, double k);

// E(rho_r) = (1/2 pi^2) Int rhohat_r(k)^2 dk, computed on the grid in the
// scaled variable t = r k with the family's analytic tail added. Obeys
// E(rho_r) = E(rho_1)/r.
double self_energy(const ChargeDensity& density, const SpectralGrid& grid);

// m_r = m - (8 pi e^2 / 3 c^2) E(rho_r). May well be negative (bare mass);
// only |m_r| < eps is rejected.
double renormalized_mass(const PhysParams& p, const ChargeDensity& density,
                         const SpectralGrid& grid, double eps = 1e-9);

// Gamma_r(lambda) = -m_r c^2/(4 pi e^2) - (2/3) <(-Delta+lambda)^-1 rho_r, rho_r>.
// Evaluated in the algebraically cancelled form
//   Gamma_r(lambda) = -m c^2/(4 pi e^2) + (2/3)(1/2 pi^2) Int lambda rhohat_r^2/(k^2+lambda) dk,
// which is identical by the renormalization prescription and makes
// Gamma_r(0) = Gamma_m(0) exact. The integral runs in the scaled variable,
// so accuracy is uniform in r; the tail bound is checked against tail_tol.
double gamma_r(double lambda, const ChargeDensity& density, const PhysParams& p,
               const SpectralGrid& grid, double tail_tol = 1e-10);

// <(-Delta+lambda)^-1 rho_r, rho_r>, scaled-variable quadrature.
double resolvent_pairing(double lambda, const ChargeDensity& density, const SpectralGrid& grid);

// The fixed smooth radial test profile X shipped for the limit diagnostics:
// Xhat(k) = pi^(3/2) exp(-k^2/4), normalized so X(0) = 1.
double test_profile_fourier(double k);

// The three displayed small-r limits:
//   gamma_diff        = Gamma_r(lambda) - Gamma_m(lambda)          -> 0
//   pairing_over_mr   = <rho_r, (-Delta+lambda)^-1/2 X> / m_r      -> 0
//   resolvent_over_mr = <(-Delta+lambda)^-1 rho_r, rho_r> / m_r    -> -3 c^2/(8 pi e^2)
struct LimitDiagnosticsRow {
    double r = 0.0;
    double gamma_r = 0.0;
    double gamma_diff = 0.0;
    double pairing_over_mr = 0.0;
    double resolvent_over_mr = 0.0;
};

struct LimitDiagnostics {
    std::vector<LimitDiagnosticsRow> rows;
    double gamma_m = 0.0;
    double resolvent_limit = 0.0;  // -3 c^2/(8 pi e^2)
    // Richardson-style extrapolations of the first and third columns along
    // the r-ladder (linear-order elimination).
    double gamma_extrapolated = 0.0;
    double resolvent_extrapolated = 0.0;
};

LimitDiagnostics limit_diagnostics(std::span<const double> r_list, double lambda,
                                   const PhysParams& p, DensityFamily family,
                                   const SpectralGrid& grid);

}  // namespace plim
