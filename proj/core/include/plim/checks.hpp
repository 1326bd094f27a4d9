#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace plim {

// Named invariant checks shared by the `plim check` subcommand and the
// acceptance suite. Every check pins its tolerance in code; tolerance_scale
// multiplies it (CLI knob, 1.0 in the acceptance run).
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct CheckContext {
    double tolerance_scale = 1.0;
    std::uint64_t seed = 12345;
    bool quick = false;  // trims the slow sweeps (used by unit tests)
};

using CheckFn = std::function<std::vector<CheckResult>(const CheckContext&)>;

struct NamedCheck {
    std::string name;
    CheckFn run;
};

// The ten acceptance criteria, in order.
const std::vector<NamedCheck>& acceptance_checks();

// Module-level invariant sweeps beyond the acceptance list.
const std::vector<NamedCheck>& invariant_checks();

// Runs a list, printing one line per result to stdout when verbose; returns
// the flattened results.
std::vector<CheckResult> run_checks(const std::vector<NamedCheck>& checks,
                                    const CheckContext& ctx, bool verbose);

}  // namespace plim
