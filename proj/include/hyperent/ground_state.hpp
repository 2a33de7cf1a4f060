#pragma once

#include "hyperent/entanglement.hpp"
#include "hyperent/spin_model.hpp"
#include "hyperent/sweep.hpp"

#include <optional>

namespace hyperent {

inline constexpr double kDefaultDegeneracyTol = 1e-9;

/// Zero-temperature state: the ground projector, or the uniform mixture
/// over the ground eigenspace when it is degenerate.
struct GroundStateResult {
    double energy = 0.0;
    DensityMatrix state;
    std::size_t degeneracy = 1;
    bool is_degenerate = false;
    std::optional<PureState> vector;  // set when degeneracy == 1
};

/// Diagonalizes H(params) and mixes every eigenvector whose energy lies
/// within `degeneracy_tol` of the minimum. Throws InvalidInput for tol <= 0.
GroundStateResult ground_state(const FieldParams& params, double degeneracy_tol = kDefaultDegeneracyTol);

// Closed forms for D = 0 and J = 1. The branch follows the sign of c; both
// branches meet at c = 0.

/// (-1 - sqrt(9 + 4|c| + 4c^2)) / 4
double ground_energy_closed_form(double c);

/// 4 sqrt(2) |q| / (q^2 + 8), with q the amplitude ratio of the ground
/// vector. At c = 0 this is the limit 2 sqrt(2) / 3.
double concurrence_closed_form(double c);

/// Normalized ground vector: a|0↓> + |⇓↑> for c <= 0, a|⇑↓> + |0↑> for c > 0.
/// At c = 0 this is one of the two degenerate ground states.
PureState ground_vector_closed_form(double c);

struct GroundSweepOptions {
    double d = 0.0;
    double degeneracy_tol = kDefaultDegeneracyTol;
    unsigned jobs = 1;
};

/// Columns: energy_numeric, energy_closed, concurrence_numeric,
/// concurrence_closed, negativity_mixed. At degenerate points
/// concurrence_numeric holds the pure-state limit; negativity_mixed is the
/// negativity of ground_state() everywhere. Throws InvalidRange.
SweepSeries ground_sweep(double c_min, double c_max, std::size_t steps, const GroundSweepOptions& opts = {});

} // namespace hyperent
