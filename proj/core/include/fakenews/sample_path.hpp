#pragma once

#include <stdexcept>
#include <vector>

#include "fakenews/time_grid.hpp"

namespace fakenews {

// Real-valued path sampled at the nodes of a TimeGrid.
struct SamplePath {
    TimeGrid grid;
    std::vector<double> values; // one per node, size n_steps + 1

    SamplePath() = default;
    explicit SamplePath(const TimeGrid& g, double fill = 0.0)
        : grid(g), values(g.n_nodes(), fill) {}

    double operator[](std::size_t j) const { return values[j]; }
    double& operator[](std::size_t j) { return values[j]; }
    std::size_t size() const { return values.size(); }
    double front() const { return values.front(); }
    double back() const { return values.back(); }
    double at_time(double t) const { return values[grid.index_of(t)]; }
};

inline void require_same_grid(const SamplePath& a, const SamplePath& b) {
    if (!(a.grid == b.grid) || a.values.size() != b.values.size())
        throw std::logic_error("sample paths must share one time grid");
}

} // namespace fakenews
