#include "hyperent/sweep.hpp"

#include "hyperent/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace hyperent {

std::size_t SweepSeries::column(const std::string& name) const {
    const auto it = std::find(value_names.begin(), value_names.end(), name);
    if (it == value_names.end())
        throw InvalidInput("no column named " + name);
    return static_cast<std::size_t>(it - value_names.begin());
}

std::vector<double> SweepSeries::parameters() const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back(r.parameter);
    return out;
}

std::vector<double> SweepSeries::values(const std::string& name) const {
    const std::size_t k = column(name);
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back(r.values.at(k));
    return out;
}

bool SweepSeries::strictly_increasing() const {
    for (std::size_t i = 1; i < records.size(); ++i)
        if (!(records[i - 1].parameter < records[i].parameter))
            return false;
    return true;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw InvalidRange("grid needs finite lo < hi");
    if (steps < 2)
        throw InvalidRange("grid needs at least 2 steps");
    const double span = static_cast<double>(steps - 1);
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        // lo*(n-1-i) + hi*i is exactly antisymmetric under i -> n-1-i when lo = -hi.
        grid[i] = (lo * static_cast<double>(steps - 1 - i) + hi * static_cast<double>(i)) / span;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(n);
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

std::string format_number(double x) {
    if (x == 0.0)
        x = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& os, const SweepSeries& series) {
    os << series.parameter_name;
    for (const auto& name : series.value_names)
        os << ',' << name;
    os << '\n';
    for (const auto& r : series.records) {
        os << format_number(r.parameter);
        for (double v : r.values)
            os << ',' << format_number(v);
        os << '\n';
    }
}

} // namespace hyperent
