#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plim/charge_density.hpp"
#include "plim/grid.hpp"
#include "plim/params.hpp"

namespace plim {

// Line-oriented scenario text: `key = value` with dotted sections, '#'
// comments, schema-versioned. Unknown keys are errors (with the offending
// key named); missing keys take the documented defaults.
//
//   schema = 1
//   params.m = 1.0
//   params.e = 1.0
//   params.c = 1.0
//   params.potential = constant | harmonic
//   params.omega = 1.0
//   params.v0 = 0.0
//   density.family = uniform_ball | polynomial_bump
//   density.r = 0.2, 0.1, 0.05
//   grid.k_max = 200
//   grid.panels = 32
//   grid.nodes_per_panel = 64
//   initial.family = zero | gaussian | two_axis | domain | named test family
//   initial.amplitude = 0.1
//   initial.<extra numeric knobs>
//   integrator.T = 1.0
//   integrator.dt = 1e-3
//   integrator.samples = 11
//   experiment.kind = gamma | dynamics | hamiltonian
//   experiment.lambda = 1.0
//   output.dir = out
//   tolerance.scale = 1.0
//   seed = 12345

inline constexpr int kScenarioSchema = 1;

struct Scenario {
    int schema = kScenarioSchema;
    PhysParams params;
    std::string potential_name = "constant";
    DensityFamily family = DensityFamily::uniform_ball;
    std::vector<double> r_list = {0.2, 0.1, 0.05, 0.025};
    GridSpec grid;
    std::string initial_family = "gaussian";
    std::map<std::string, double> initial_knobs;  // amplitude etc., emitted sorted
    double T = 1.0;
    double dt = 1e-3;
    int samples = 11;
    std::string experiment = "gamma";
    double experiment_lambda = 1.0;
    std::string out_dir = "out";
    double tolerance_scale = 1.0;
    std::uint64_t seed = 12345;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);
std::string emit_scenario(const Scenario& s);

}  // namespace plim
