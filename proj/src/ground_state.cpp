#include "hyperent/ground_state.hpp"

#include "hyperent/errors.hpp"

#include <cmath>
#include <numbers>

namespace hyperent {

GroundStateResult ground_state(const FieldParams& params, double degeneracy_tol) {
    if (!(degeneracy_tol > 0.0))
        throw InvalidInput("degeneracy tolerance must be positive");

    const auto eig = hermitian_eig(build_hamiltonian(params));
    const double e0 = eig.eigenvalues.front();

    std::size_t degeneracy = 0;
    while (degeneracy < eig.eigenvalues.size() && eig.eigenvalues[degeneracy] - e0 <= degeneracy_tol)
        ++degeneracy;

    std::vector<PureState> vectors;
    vectors.reserve(degeneracy);
    for (std::size_t k = 0; k < degeneracy; ++k)
        vectors.emplace_back(eig.eigenvector(k), kNuclearElectronDims);
    const std::vector<double> weights(degeneracy, 1.0 / static_cast<double>(degeneracy));

    GroundStateResult result{
        .energy = e0,
        .state = DensityMatrix::mixture(vectors, weights),
        .degeneracy = degeneracy,
        .is_degenerate = degeneracy > 1,
        .vector = std::nullopt,
    };
    if (degeneracy == 1)
        result.vector = vectors.front();
    return result;
}

namespace {

// Ratio q of the two nonzero amplitudes (times 2 sqrt 2) of the ground vector.
// For c <= 0 the direct form 1 - 2c - sqrt(9 - 4c + 4c^2) cancels badly at
// large |c|; its product with 1 - 2c + sqrt(...) is exactly -8.
double amplitude_ratio(double c) {
    if (c <= 0.0) {
        const double s = std::sqrt(9.0 - 4.0 * c + 4.0 * c * c);
        return -8.0 / (1.0 - 2.0 * c + s);
    }
    const double s = std::sqrt(9.0 + 4.0 * c + 4.0 * c * c);
    return -(1.0 + 2.0 * c + s);
}

} // namespace

double ground_energy_closed_form(double c) {
    const double a = std::abs(c);
    return (-1.0 - std::sqrt(9.0 + 4.0 * a + 4.0 * a * a)) / 4.0;
}

double concurrence_closed_form(double c) {
    const double q = amplitude_ratio(c);
    return 4.0 * std::numbers::sqrt2 * std::abs(q) / (q * q + 8.0);
}

PureState ground_vector_closed_form(double c) {
    const double a = amplitude_ratio(c) / (2.0 * std::numbers::sqrt2);
    std::vector<Complex> amps(kNuclearElectronDims.total());
    const auto& d = kNuclearElectronDims;
    if (c <= 0.0) {
        amps[d.index(1, 1)] = a;    // |0↓>
        amps[d.index(2, 0)] = 1.0;  // |⇓↑>
    } else {
        amps[d.index(0, 1)] = a;    // |⇑↓>
        amps[d.index(1, 0)] = 1.0;  // |0↑>
    }
    return PureState::normalized(std::move(amps), d);
}

SweepSeries ground_sweep(double c_min, double c_max, std::size_t steps, const GroundSweepOptions& opts) {
    const std::vector<double> grid = uniform_grid(c_min, c_max, steps);

    SweepSeries series;
    series.parameter_name = "c";
    series.value_names = {"energy_numeric", "energy_closed", "concurrence_numeric", "concurrence_closed",
                          "negativity_mixed"};
    series.records.resize(grid.size());

    parallel_for(grid.size(), opts.jobs, [&](std::size_t i) {
        const double c = grid[i];
        const GroundStateResult gs = ground_state(FieldParams{.c = c, .d = opts.d}, opts.degeneracy_tol);
        const double conc_closed = concurrence_closed_form(c);
        const double conc_numeric = gs.vector ? concurrence_pure(*gs.vector) : conc_closed;
        series.records[i] = {c,
                             {gs.energy, ground_energy_closed_form(c), conc_numeric, conc_closed,
                              negativity(gs.state)}};
    });
    return series;
}

} // namespace hyperent
