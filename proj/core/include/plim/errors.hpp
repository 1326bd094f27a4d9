#pragma once

#include <stdexcept>
#include <string>

namespace plim {

// Error taxonomy. Every throwing precondition or accuracy guard in the
// library uses one of these so callers (CLI, tests) can map failures to
// exit codes without string matching.
struct Error : std::runtime_error {
    enum class Code {
        domain,          // precondition violated (bad argument, grid mismatch, ...)
        singular_point,  // evaluation at a point where the field is singular
        near_zero_mass,  // |m_r| below the configured threshold
        accuracy,        // quadrature tail or discretization budget exceeded
        pole,            // resolvent evaluated at the point eigenvalue
        extrapolation,   // Richardson extrapolation failed to settle
        instability,     // integrator aborted on energy-drift watchdog
        incoherent_data, // initial data violate the domain boundary condition
        scenario,        // scenario text malformed / schema mismatch
        io,              // file read/write failure
    };

    Error(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
    Code code;
};

[[noreturn]] inline void fail(Error::Code c, const std::string& what) { throw Error(c, what); }

}  // namespace plim
