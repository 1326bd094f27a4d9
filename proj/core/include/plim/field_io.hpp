#pragma once

#include <iosfwd>
#include <string>

#include "plim/sector_field.hpp"

namespace plim {

// Flat text serialization of sector fields and reduced states. Versioned
// header, grid echo, per-axis profile samples, singular term list. Floats
// are written with 17 significant digits, so load(save(A)) is bit-exact.
//
//   plim-field 1
//   grid <k_max> <panels> <nodes_per_panel>
//   axis <j> <n>
//   <n samples>
//   ...
//   singular <count>
//   <qx qy qz lambda>

void save_field(std::ostream& os, const HybridSectorField& A);
HybridSectorField load_field(std::istream& is);

void save_field_file(const std::string& path, const HybridSectorField& A);
HybridSectorField load_field_file(const std::string& path);

// plim-state 1: q, p, t lines followed by the A and E field blocks.
void save_state(std::ostream& os, const ReducedState& s);
ReducedState load_state(std::istream& is);
void save_state_file(const std::string& path, const ReducedState& s);
ReducedState load_state_file(const std::string& path);

// Atomic text file write (temp + rename); partial output is never visible.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace plim
