#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace hyperent {

/// Ordered (parameter, values...) records, one named column per value.
struct SweepSeries {
    struct Record {
        double parameter = 0.0;
        std::vector<double> values;
    };

    std::string parameter_name;
    std::vector<std::string> value_names;
    std::vector<Record> records;

    /// Index of a named value column; throws InvalidInput if absent.
    std::size_t column(const std::string& name) const;
    std::vector<double> parameters() const;
    std::vector<double> values(const std::string& name) const;
    bool strictly_increasing() const;
};

/// `steps` points from lo to hi inclusive. Symmetric ranges give exactly
/// mirrored points (and hit 0 exactly when steps is odd). Throws InvalidRange.
std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

/// Runs body(i) for i in [0, n) on up to `jobs` threads. jobs <= 1 runs inline.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

/// 12 significant digits, '.' separator, no grouping.
std::string format_number(double x);

/// Header `parameter_name,value_names...` then one row per record, LF endings.
void write_csv(std::ostream& os, const SweepSeries& series);

} // namespace hyperent
