#pragma once

#include <array>
#include <vector>

#include "plim/charge_density.hpp"
#include "plim/sector_field.hpp"

namespace plim {

// Regularized Maxwell-Lorentz system reduced to the sector: per axis a bath
// of oscillator modes ahat_j(k) with rank-one coupling through
// v_j = (2/3) <rho_r, f_j>, plus the particle pair (q, p).
//
//   addot_j(k) = -c^2 k^2 ahat_j - (4 pi e^2/m_r) v_j rhohat_r + (4 pi c e/m_r) p_j rhohat_r
//   qdot = p/m_r - (e/m_r c) v,   pdot = -grad V(q)
//
// E is recovered as adot/(4 pi c^2).
struct BathState {
    GridPtr grid;
    std::array<std::vector<double>, 3> a;     // field profiles ahat_j
    std::array<std::vector<double>, 3> adot;  // time derivatives
    Vec3 q, p;
    double t = 0.0;

    static BathState from_fields(const HybridSectorField& A0, const HybridSectorField& E0,
                                 const Vec3& q0, const Vec3& p0, const PhysParams& p);
    HybridSectorField field_A() const;
    HybridSectorField field_E() const;
};

Vec3 coupling_v(const BathState& s, const ChargeDensity& density);

// Hamiltonian (regularized):
//   2 pi c^2 ||E||^2 + (1/8 pi)||grad A||^2 + (1/2 m_r)|p - (e/c)<rho_r,A>|^2 + V(q).
double hamiltonian_r(const BathState& s, const ChargeDensity& density, const PhysParams& p);

struct RegularizedOptions {
    double T = 1.0;
    double dt = 0.0;           // 0: choose 0.5/(c k_max)
    int sample_stride = 0;     // 0: ~200 samples
    double drift_abort = 1e-2; // relative energy-drift watchdog
    bool keep_fields = false;  // store field snapshots at samples
};

struct RegularizedSample {
    double t = 0.0;
    Vec3 q, p, qdot, v;
    double H = 0.0;
};

struct RegularizedTrajectory {
    std::vector<RegularizedSample> samples;
    std::vector<BathState> fields;  // only if keep_fields
    double m_r = 0.0;
    double dt = 0.0;
    double max_drift = 0.0;
};

// Strang splitting with exact sub-flows: potential kick (exact), particle
// drift + rank-one field kick at frozen A (exact), free mode rotation
// (exact). Symmetric, symplectic, time-reversible; dt may be negative.
RegularizedTrajectory evolve_regularized(const BathState& initial, const ChargeDensity& density,
                                         const PhysParams& p, const RegularizedOptions& opt);

}  // namespace plim
