#pragma once

#include "hyperent/ground_state.hpp"
#include "hyperent/thermal.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hyperent::cli {

enum class Command { ground_sweep, thermal_sweep, measure, critical_temp };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitNumericalFailure = 3;

struct RunConfig {
    Command command = Command::measure;

    // sweeps
    double c_min = -5.0;
    double c_max = 5.0;
    std::size_t steps = 1001;
    std::vector<double> temps{0.05, 0.107, 0.2, 0.5};
    unsigned jobs = 1;

    // point queries
    double c = 0.0;
    double d = 0.0;
    std::optional<double> t;
    std::optional<double> b1;  // tesla
    std::optional<double> b2;  // tesla

    // critical-temp
    double t_low = 0.05;
    double t_high = 0.5;
    double tol = 1e-4;
    double h = kCurvatureStep;

    double degeneracy_tol = kDefaultDegeneracyTol;
    std::string out_path;  // empty: write to `out`
};

/// Executes one command. Results go to `out` (or out_path), diagnostics to `err`.
/// Returns 0, 2 for invalid input, 3 for numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperent::cli
