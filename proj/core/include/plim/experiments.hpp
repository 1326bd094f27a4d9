#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plim/scenario.hpp"
#include "plim/sector_field.hpp"

namespace plim {

// Experiment drivers for the convergence statements, plus report I/O.
// Reports carry every tolerance they were judged against; emission writes
// CSV tables (17 significant digits, fixed column order), a JSON manifest
// with grid/integrator metadata, and gnuplot-ready two-column .dat files.
// All writes are atomic.

struct Criterion {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
    std::string kind;
    std::vector<Table> tables;
    std::vector<Criterion> criteria;
    std::optional<double> fitted_order;
    std::optional<double> fit_residual;
    std::string environment;  // grid/integrator echo
    bool all_pass() const;
};

// |Gamma_r - Gamma_m| across the r-list plus the three limit diagnostics,
// with a log-log order fit (skipped for single-r input; fit failure on
// non-monotone data is reported, not fatal).
ExperimentReport run_gamma_convergence(const Scenario& s);

// Regularized vs limit trajectories on shared initial data: per-r
// sup_t |q_r - q|, sup_t |qdot_r - Q|, sup_t |p_r - p|, sup_t ||E_r - E||,
// with monotone-decrease assertions. Columns identically at the noise floor
// (the p column when V is constant, everything when e = 0) pass by floor.
ExperimentReport run_dynamics_convergence(const Scenario& s);

// |H_r - H_m| on a fixed smooth Q_A = 0 state across the r-list.
ExperimentReport run_hamiltonian_convergence(const Scenario& s);

// Initial data families shipped for the dynamics experiments. All are
// coherent (boundary residual ~ 0 with p0 = 0): "gaussian" and "two_axis"
// are smooth with Q = 0 and vanishing origin value; "domain" carries a
// lambda0 singular term with the slaved coefficient.
ReducedState make_initial_state(const std::string& family, double amplitude, GridPtr grid,
                                const PhysParams& p);

// Writes report files under dir: <kind>_<table>.csv, <kind>_manifest.json,
// <kind>_<table>.dat. Returns the list of paths written.
std::vector<std::string> emit_report(const ExperimentReport& report, const std::string& dir);

std::string format_double(double v);  // %.17g

}  // namespace plim
