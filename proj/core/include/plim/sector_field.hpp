#pragma once

#include <array>
#include <optional>
#include <vector>

#include "plim/grid.hpp"
#include "plim/kernels.hpp"
#include "plim/params.hpp"
#include "plim/vec3.hpp"

namespace plim {

// Transverse fields in the reduced sector { sum_j M e_j f_j : f_j radial },
// with M the divergence-free projector. A field is stored as a hybrid:
//
//   * three radial profiles sampled at the spectral grid nodes (the regular
//     part, one pre-projection profile per axis), and
//   * a finite list of singular terms (Q, lambda), each representing the
//     analytic field (4 pi e / c) M Q G_lambda.
//
// Yukawa profiles decay only like k^-2 and would poison the quadrature
// tails, so they never enter the sampled part; all singular x singular
// products use the closed form green_inner.
//
// Pairing convention (used by every operation below): a scalar radial g
// paired against a sector field A gives the vector with components
// (2/3) <g, f_j>; the 2/3 is the angular average of the transverse
// projector. Under this convention the eigenvectors X_j = 2 sqrt(2 pi m)
// (c/e) M e_j G_lambda0 have squared norm 4/9 (not 1); the eigenrelation,
// not the normalization, is what the dynamics uses.

struct RadialProfile {
    std::vector<double> fhat;  // samples at grid nodes

    RadialProfile() = default;
    explicit RadialProfile(std::size_t n) : fhat(n, 0.0) {}

    bool empty() const { return fhat.empty(); }
    std::size_t size() const { return fhat.size(); }
    double& operator[](std::size_t i) { return fhat[i]; }
    double operator[](std::size_t i) const { return fhat[i]; }
};

struct SingularTerm {
    Vec3 q;              // Q coefficient, units of the Q_A charge-velocity
    double lambda = 0.0; // scale, > 0

    SingularTerm() = default;
    SingularTerm(const Vec3& q_, double lambda_) : q(q_), lambda(lambda_) {
        if (!(lambda_ > 0.0)) fail(Error::Code::domain, "singular term needs lambda > 0");
    }
};

class HybridSectorField {
  public:
    HybridSectorField() = default;
    explicit HybridSectorField(GridPtr grid);

    const GridPtr& grid() const { return grid_; }
    const SpectralGrid& g() const { return *grid_; }

    std::array<RadialProfile, 3>& regular() { return regular_; }
    const std::array<RadialProfile, 3>& regular() const { return regular_; }
    std::vector<SingularTerm>& singular() { return singular_; }
    const std::vector<SingularTerm>& singular() const { return singular_; }
    bool purely_regular() const { return singular_.empty(); }

    // Build the regular part from per-axis closed-form profiles fhat_j(k).
    static HybridSectorField from_profiles(GridPtr grid,
                                           const std::array<std::function<double(double)>, 3>& fhat);
    // Single-axis helper: M e_axis f.
    static HybridSectorField axis_profile(GridPtr grid, int axis,
                                          const std::function<double(double)>& fhat);
    // Pure singular field (4 pi e / c) M Q G_lambda.
    static HybridSectorField singular_field(GridPtr grid, const Vec3& q, double lambda);

    // Sum of singular coefficients: the algebraic route to Q_A (the
    // lambda-change identity makes coefficients additive across scales).
    Vec3 singular_coefficient_sum() const;

    // Value of the total pre-projection profile along one axis at node i,
    // singular terms included ((4 pi e / c) Q_j / (k^2 + lambda)).
    double profile_at_node(int axis, std::size_t i, const PhysParams& p) const;

    // Move every singular term to the common scale lambda_target; the
    // H^2-regular differences G_lambda - G_mu land in the sampled part.
    HybridSectorField with_singular_scale(double lambda_target, const PhysParams& p) const;

    HybridSectorField& operator+=(const HybridSectorField& o);
    HybridSectorField& operator-=(const HybridSectorField& o);
    HybridSectorField& operator*=(double s);
    friend HybridSectorField operator+(HybridSectorField a, const HybridSectorField& b) { return a += b; }
    friend HybridSectorField operator-(HybridSectorField a, const HybridSectorField& b) { return a -= b; }
    friend HybridSectorField operator*(double s, HybridSectorField a) { return a *= s; }

  private:
    GridPtr grid_;
    std::array<RadialProfile, 3> regular_;
    std::vector<SingularTerm> singular_;
};

// (A, E, q, p): state of the limit system. E may carry singular terms
// (lambda > 0 enforced by SingularTerm); the charge-velocity of A doubles
// as the particle velocity.
struct ReducedState {
    HybridSectorField A;
    HybridSectorField E;
    Vec3 q;
    Vec3 p;
    double t = 0.0;
};

// ---- sector calculus ----

// Full sector inner product: (2/3) sum_j <f_j, g_j>, regular x regular by
// quadrature, regular x singular by quadrature against 1/(k^2+lambda),
// singular x singular closed form.
double sector_inner(const HybridSectorField& A, const HybridSectorField& B, const PhysParams& p);
double sector_norm(const HybridSectorField& A, const PhysParams& p);

// <g, A> for closed-form scalar profile ghat: vector with components
// (2/3) <g, f_j>. Used with ghat = 1/(k^2+lambda) internally.
Vec3 pair_with_green(double lambda, const HybridSectorField& A, const PhysParams& p);

// A(0) for purely regular, origin-evaluable fields: (2/3) f_j(0) per axis.
Vec3 eval_at_origin(const HybridSectorField& A);

// Sphere average over S_rho: regular part via the sinc transform, singular
// terms via (2/3)(e/c) Q exp(-sqrt(lambda) rho)/rho.
Vec3 sphere_average(const HybridSectorField& A, double rho, const PhysParams& p);

// Q_A = (3c/2e) lim_{rho->0} rho * sphere_average(A, rho), by Richardson
// extrapolation on rho_j = rho0 2^-j. Equals the singular coefficient sum.
struct ExtrapolationOptions {
    double rho0 = 0.1;
    int levels = 6;
    double tol = 1e-8;
};
Vec3 extract_Q(const HybridSectorField& A, const PhysParams& p, const ExtrapolationOptions& opt = {});

// Residual of the affine boundary condition:
//   lim sphere averages of (A - (4 pi e / c) M Q_A G_0)  -  ( -(mc/e) Q_A + (c/e) p ).
// Zero (within tolerance) iff A is in the H_m^p domain.
Vec3 boundary_residual(const HybridSectorField& A, const Vec3& p_momentum, const PhysParams& p,
                       const ExtrapolationOptions& opt = {});

// R_m(z) X = (-Delta+z)^-1 X + Gamma_m(z)^-1 M G_z <G_z, X>. Requires z > 0,
// z != lambda0 (pole). Input singular terms pass through the free resolvent
// by the exact identity (k^2+z)^-1 (k^2+l)^-1 = [(k^2+l)^-1 - (k^2+z)^-1]/(z-l).
HybridSectorField apply_resolvent(double z, const HybridSectorField& X, const PhysParams& p);

// Quadratic form F_m(A,A) evaluated through the auxiliary scale lambda:
//   F_m + lambda ||A||^2 = ||(-Delta+lambda)^(1/2) A_lambda||^2
//                          + (4 pi e / c)^2 Gamma_m(lambda) |Q_A|^2.
// The value is lambda-independent.
double form_Fm(const HybridSectorField& A, double lambda, const PhysParams& p);

// P_A = -12 pi sqrt(lambda0) <G_lambda0, A> (vector pairing).
Vec3 p_functional(const HybridSectorField& A, const PhysParams& p);

// Position-space sample of the sector field (diagnostic). The transverse
// projector splits the value into alpha(|x|) e_j + beta(|x|)(xhat.e_j) xhat
// per axis; alpha, beta come from j0/j1 radial transforms, with closed
// forms for the Yukawa terms.
Vec3 reconstruct_at_point(const HybridSectorField& A, const Vec3& x, const PhysParams& p);

}  // namespace plim
