#include "hyperent/thermal.hpp"

#include "hyperent/errors.hpp"
#include "hyperent/ground_state.hpp"

#include <cmath>
#include <string>

namespace hyperent {

DensityMatrix gibbs_state(const ThermalParams& params) {
    const double t = params.temperature;
    if (!(t > 0.0) || !std::isfinite(t))
        throw InvalidInput("temperature must be positive and finite");
    if (t < kTemperatureFloor)
        return ground_state(params.field).state;

    const auto eig = hermitian_eig(build_hamiltonian(params.field));
    const std::size_t n = eig.eigenvalues.size();
    const double e0 = eig.eigenvalues.front();

    std::vector<double> weights(n);
    double z = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        weights[k] = std::exp(-(eig.eigenvalues[k] - e0) / t);
        z += weights[k];
    }

    ComplexMatrix rho(n, n);
    const ComplexMatrix& v = eig.eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                s += weights[k] * v(i, k) * std::conj(v(j, k));
            rho(i, j) = s / z;
            rho(j, i) = std::conj(rho(i, j));
        }
    for (std::size_t i = 0; i < n; ++i)
        rho(i, i) = rho(i, i).real();
    return DensityMatrix(std::move(rho), kNuclearElectronDims);
}

double thermal_negativity(double c, double d, double t) {
    return negativity(gibbs_state(ThermalParams{.temperature = t, .field = FieldParams{.c = c, .d = d}}));
}

std::vector<ThermalSeries> thermal_sweep(const std::vector<double>& temps, double c_min, double c_max,
                                         std::size_t steps, double d, unsigned jobs) {
    if (temps.empty())
        throw InvalidRange("thermal sweep needs at least one temperature");
    for (double t : temps)
        if (!(t > 0.0) || !std::isfinite(t))
            throw InvalidRange("temperatures must be positive, got " + std::to_string(t));
    const std::vector<double> grid = uniform_grid(c_min, c_max, steps);

    std::vector<ThermalSeries> out(temps.size());
    for (std::size_t k = 0; k < temps.size(); ++k) {
        out[k].temperature = temps[k];
        out[k].series.parameter_name = "c";
        out[k].series.value_names = {"negativity"};
        out[k].series.records.resize(grid.size());
    }

    const std::size_t per_series = grid.size();
    parallel_for(temps.size() * per_series, jobs, [&](std::size_t flat) {
        const std::size_t k = flat / per_series;
        const std::size_t i = flat % per_series;
        out[k].series.records[i] = {grid[i], {thermal_negativity(grid[i], d, temps[k])}};
    });
    return out;
}

double curvature_at_zero(double t, double h) {
    if (h == 0.0 || !std::isfinite(h))
        throw InvalidInput("curvature step must be nonzero and finite");
    const double plus = thermal_negativity(h, 0.0, t);
    const double mid = thermal_negativity(0.0, 0.0, t);
    const double minus = thermal_negativity(-h, 0.0, t);
    return (plus - 2.0 * mid + minus) / (h * h);
}

CriticalTemperatureResult find_critical_temperature(double t_low, double t_high, double tol, double h) {
    if (!(t_low > 0.0) || !(t_low < t_high) || !std::isfinite(t_high))
        throw InvalidRange("critical temperature search needs 0 < t_low < t_high");
    if (!(tol > 0.0))
        throw InvalidRange("tolerance must be positive");
    if (!(h > 0.0) || !std::isfinite(h))
        throw InvalidRange("curvature step must be positive");

    double lo = t_low;
    double hi = t_high;
    double k_lo = curvature_at_zero(lo, h);
    double k_hi = curvature_at_zero(hi, h);
    if (!(k_lo * k_hi < 0.0))
        throw NoSignChange("curvature at C = 0 has the same sign at T = " + std::to_string(lo) + " (" +
                           std::to_string(k_lo) + ") and T = " + std::to_string(hi) + " (" +
                           std::to_string(k_hi) + ")");

    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double k_mid = curvature_at_zero(mid, h);
        if (k_mid == 0.0) {
            lo = hi = mid;
            k_lo = k_hi = 0.0;
            ++iterations;
            break;
        }
        if ((k_mid > 0.0) == (k_lo > 0.0)) {
            lo = mid;
            k_lo = k_mid;
        } else {
            hi = mid;
            k_hi = k_mid;
        }
        ++iterations;
    }
    return {0.5 * (lo + hi), {lo, hi}, k_lo, k_hi, iterations};
}

} // namespace hyperent
