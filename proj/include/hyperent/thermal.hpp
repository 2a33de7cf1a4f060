#pragma once

#include "hyperent/entanglement.hpp"
#include "hyperent/spin_model.hpp"
#include "hyperent/sweep.hpp"

#include <utility>
#include <vector>

namespace hyperent {

/// Below this temperature the Gibbs state is replaced by the ground-state mixture.
inline constexpr double kTemperatureFloor = 1e-8;
/// Step of the central second difference used to classify C = 0.
inline constexpr double kCurvatureStep = 1e-3;

struct ThermalParams {
    double temperature = 1.0;  // k_B = 1
    FieldParams field;
};

/// exp(-H/T) / Z, built from the spectrum with weights exp(-(E_i - E_min)/T).
/// Throws InvalidInput for T <= 0.
DensityMatrix gibbs_state(const ThermalParams& params);

/// Negativity of the Gibbs state at fields (c, d) and temperature t.
double thermal_negativity(double c, double d, double t);

struct ThermalSeries {
    double temperature = 0.0;
    SweepSeries series;  // parameter "c", single column "negativity"
};

/// One negativity-vs-C series per temperature. Throws InvalidRange.
std::vector<ThermalSeries> thermal_sweep(const std::vector<double>& temps, double c_min, double c_max,
                                         std::size_t steps, double d = 0.0, unsigned jobs = 1);

/// (N(h) - 2 N(0) + N(-h)) / h^2 of the thermal negativity in C at D = 0.
/// Positive: C = 0 is a local minimum; negative: local maximum. Even in h.
double curvature_at_zero(double t, double h = kCurvatureStep);

struct CriticalTemperatureResult {
    double t_c = 0.0;
    std::pair<double, double> bracket;
    double curvature_low = 0.0;
    double curvature_high = 0.0;
    int iterations = 0;
};

/// Bisects the sign change of curvature_at_zero on [t_low, t_high] until the
/// bracket is no wider than tol. Throws NoSignChange or InvalidRange.
CriticalTemperatureResult find_critical_temperature(double t_low, double t_high, double tol,
                                                    double h = kCurvatureStep);

} // namespace hyperent
