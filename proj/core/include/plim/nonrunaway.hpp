#pragma once

#include <vector>

#include "plim/limit_dynamics.hpp"
#include "plim/sector_field.hpp"

namespace plim {

// Stable-manifold (non-runaway) machinery for the free case with vanishing
// particle momentum: the maps Phi / Phi^-1 / Psi, the symplectic forms
// Omega_0 and Omega_nr, the Hamiltonian H_nr with its vector field, the
// free flow U_f, the grid flow U_nr, and the conjugacy identities tying
// them to the limit dynamics.

// Phi A = A + M P_A G_lambda0 on purely regular (H^1 representative) input;
// the image satisfies <Phi A, X_j> = 0.
HybridSectorField phi_map(const HybridSectorField& A, const PhysParams& p);

// L^2 extension of Phi: same formula on hybrid fields, acting as the
// orthogonal projection onto the non-runaway subspace (annihilates the
// eigendirections M e_j G_lambda0).
HybridSectorField nr_project(const HybridSectorField& A, const PhysParams& p);

// Phi^-1 A = A - (4 pi e / c) M Q_A G_lambda0: moves all singular terms to
// lambda0 and strips them. Input must pass nr_check within tol.
HybridSectorField phi_inverse(const HybridSectorField& A, const PhysParams& p, double tol = 1e-6);

// The three pairings <A, X_j^0>; A is declared non-runaway when the largest
// component is below tolerance. Under the fixed pairing convention
// ||X^0||^2 = 4/9 in default units (the computed value, asserted in tests).
Vec3 nr_check(const HybridSectorField& A, const PhysParams& p);

// H^1 x L^2 representative pair (both components purely regular).
struct NRPair {
    HybridSectorField A;
    HybridSectorField E;
};

// Omega_0((A1,E1),(A2,E2)) = <A1,E2> - <A2,E1>.
double omega0(const NRPair& x, const NRPair& y, const PhysParams& p);

// Omega_nr = Omega_0 - (1/12 pi sqrt(lambda0)) (P_A1 . P_E2 - P_A2 . P_E1);
// equals the pullback of Omega_0 through Psi = Phi x Phi.
double omega_nr(const NRPair& x, const NRPair& y, const PhysParams& p);

// H_nr = 2 pi c^2 ||E||^2 + (1/8 pi)||grad A||^2
//        - (c^2 / 6 sqrt(lambda0)) |P_E|^2 + (sqrt(lambda0)/96 pi^2) |P_A|^2.
// Nonnegative; equals H_m^+ (Phi A, Phi E).
double hamiltonian_nr(const NRPair& x, const PhysParams& p);

// ||grad A||^2 = sum_j (2/3)(1/2 pi^2) Int k^4 |fhat_j|^2 dk (regular fields).
double grad_norm2(const HybridSectorField& A, const PhysParams& p);

// Generator of the reduced flow:
//   X_Hnr(A, E) = (4 pi c^2 E, (1/4 pi) Delta A + (3/2) sqrt(lambda0) M A(0) G_lambda0).
// Returns (Adot, Edot) as fields.
NRPair nr_vector_field(const NRPair& x, const PhysParams& p);

struct NREvolveOptions {
    double dt = 2e-4;
    double drift_abort = 1e-2;
};
struct NRTrajectory {
    NRPair state;
    double H0 = 0.0;
    double max_drift = 0.0;  // relative H_nr drift over the run
};
// Strang splitting: exact free mode rotation + rank-one kick through A(0).
NRTrajectory evolve_nr(const NRPair& x, const PhysParams& p, double T,
                       const NREvolveOptions& opt = {});

// Exact free wave flow (per-mode rotation); t may be negative.
NRPair evolve_free(const NRPair& x, const PhysParams& p, double t);

// Distances between the three realizations of the reduced dynamics at time
// t, in the sector L^2 norm on pairs:
//   norm43 = || U_m(t) Psi x - Psi U_nr(t) x ||
//   norm44 = || U_m(t) Psi x - Psi U_f(t) x ||
// U_m(t) is realized through the limit-dynamics route (free case, p == 0).
struct ConjugacyResult {
    double t = 0.0;
    double norm43 = 0.0;
    double norm44 = 0.0;
};
struct ConjugacyOptions {
    double dt_ode = 1e-3;   // charge-ODE step for the U_m route
    double dt_nr = 2e-4;    // U_nr splitting step
};
ConjugacyResult conjugacy_check(const NRPair& x, const PhysParams& p, double t,
                                const ConjugacyOptions& opt = {});

double pair_distance(const HybridSectorField& A1, const HybridSectorField& E1,
                     const HybridSectorField& A2, const HybridSectorField& E2,
                     const PhysParams& p);

}  // namespace plim
