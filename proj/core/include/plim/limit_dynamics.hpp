#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plim/sector_field.hpp"

namespace plim {

// Point-limit dynamics through the retarded decomposition: the field is
// A(t) = A_f(t) + (4 pi e / c) M A_delta(t) with A_f the free evolution of
// the initial data and A_delta the retarded potential of the point source
// Q_A delta_0; the charge-velocity solves the integrated ALD equation
//
//   Qdot = c sqrt(lambda0) Q + (3 c^2 / 2e) A_f(t, 0) - (3 c^3 / 2 e^2) p.
//
// The unstable mode c sqrt(lambda0) is handled analytically by an
// integrating-factor (variation-of-constants) RK4 step.

struct FreeFieldData {
    HybridSectorField A0;
    HybridSectorField E0;  // Adot0 = 4 pi c^2 E0
};

// A_f(t, 0): spherical-means evaluation u(t,0) = d/dt[t f(ct)] + t g(ct)
// per axis for sampled profiles, closed forms for the Yukawa terms. Finite
// for t -> 0+ even with singular data.
Vec3 kirchhoff_origin(const FreeFieldData& data, double t, const PhysParams& p);

// Time-sampled charge path with cubic Hermite interpolation (derivatives
// stored from the ODE right-hand side).
class ChargePath {
  public:
    std::vector<double> t;
    std::vector<Vec3> Q, Qdot, q, p;
    bool truncated = false;   // runaway overflow guard hit
    double t_truncated = 0.0;

    double t_begin() const { return t.front(); }
    double t_end() const { return truncated ? t_truncated : t.back(); }
    Vec3 eval_Q(double s) const;
    Vec3 eval_Qdot(double s) const;
    Vec3 eval_q(double s) const;
    Vec3 eval_p(double s) const;

  private:
    std::size_t locate(double s) const;
};

struct ChargeOdeOptions {
    double dt = 1e-3;
    double overflow_guard = 1e8;  // |Q| beyond this truncates with a flag
};

// Integrates (Q, q, p) jointly: Qdot as above with the Kirchhoff drive,
// qdot = Q, pdot = -grad V(q). Lawson/integrating-factor RK4; exact for
// vanishing drive.
ChargePath solve_charge_ode(const Vec3& Q0, const Vec3& q0, const Vec3& p0,
                            const FreeFieldData& data, const PhysParams& p, double T,
                            const ChargeOdeOptions& opt = {});

// Classical non-runaway selection: the unique initial Q with bounded
// forward orbit under a decaying drive,
//   Q(0) = -Int_0^Tinf exp(-c sqrt(lambda0) s) drive(s) ds,
// where drive(s) = (3c^2/2e) A_f(s,0) - (3c^3/2e^2) p(s). The declared
// bound |drive(s)| <= bound for s >= Tinf gives the tail estimate.
struct NonrunawayResult {
    Vec3 Q0;
    double tail_bound = 0.0;
};
NonrunawayResult nonrunaway_initial_Q(const FreeFieldData& data,
                                      const std::function<Vec3(double)>& p_path,
                                      const PhysParams& p, double T_inf,
                                      double drive_tail_bound = 0.0);
// Raw-drive variant (drive given directly, for tests and the free case).
NonrunawayResult nonrunaway_initial_Q(const std::function<Vec3(double)>& drive,
                                      const PhysParams& p, double T_inf,
                                      double drive_tail_bound = 0.0);

// (4 pi e / c) M A_delta(t) in sector form: profile
//   hhat_j(t,k) = (4 pi e / k) Int_0^t sin(k c (t-s)) Q_j(s) ds,
// split as a singular term (Q(t), lambda0) plus sampled remainder. The path
// must cover [0, t].
HybridSectorField retarded_field(const ChargePath& path, double t, const PhysParams& p,
                                 GridPtr grid);
// d/dt of the same object (for E); singular coefficient Qdot(t)/(4 pi c^2)
// is returned separately by evolve_limit.
HybridSectorField retarded_field_dt(const ChargePath& path, double t, const PhysParams& p,
                                    GridPtr grid);

double hamiltonian_m(const ReducedState& s, const PhysParams& p);
// Field-only part 2 pi c^2 ||E||^2 + (1/8 pi) F_m(A,A) (the nonnegative
// Hamiltonian of the free case).
double hamiltonian_m_plus(const HybridSectorField& A, const HybridSectorField& E,
                          const PhysParams& p);

struct LimitOptions {
    double dt = 1e-3;
    int samples = 11;                  // states assembled at this many times
    double coherence_tol = 1e-4;       // boundary-residual gate on the data
    std::optional<Vec3> qdot0;         // must match Q_{A0} when provided
    bool check_two_path = true;        // extract_Q vs ODE at samples
};

struct LimitSample {
    ReducedState state;
    Vec3 Q_ode;
    double H = 0.0;
    double boundary_residual_norm = 0.0;
    double two_path_error = 0.0;  // |extract_Q(A(t)) - Q_ode(t)|
};

struct LimitTrajectory {
    ChargePath path;
    std::vector<LimitSample> samples;
    double dt = 0.0;
};

// Full limit evolution (Theorem-style assembly): rejects incoherent data,
// integrates the charge ODE, and assembles hybrid (A, E) states at sample
// times. With e = 0 the system is free: fields rotate, the particle is
// ballistic in V, and Q == 0 (data must be regular).
LimitTrajectory evolve_limit(const ReducedState& initial, const PhysParams& p, double T,
                             const LimitOptions& opt = {});

// Residual of the third-order ALD equation
//   m qddot - (2 e^2 / 3 c^3) qdddot + (e/c) Afdot(t,0) - F(q)
// along a path, with stencil derivatives (5-point for qddot and the drive,
// 7-point for qdddot, all O(dt^4)). Returns one residual vector per interior
// sample.
struct AldResidual {
    std::vector<double> t;
    std::vector<Vec3> residual;
    double max_norm = 0.0;
};
AldResidual ald_consistency(const ChargePath& path, const FreeFieldData& data,
                            const PhysParams& p);

// Exponential growth-rate fit of |Q(t)| over a window (runaway diagnostic).
double fit_growth_rate(const ChargePath& path, double t0, double t1);

}  // namespace plim
