#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace fakenews {

// Uniform discretization of [0, T]: nodes t_j = j * dt, j = 0..n_steps.
struct TimeGrid {
    double horizon = 1.0;
    std::size_t n_steps = 500;

    TimeGrid() = default;
    TimeGrid(double T, std::size_t steps) : horizon(T), n_steps(steps) { validate(); }

    void validate() const {
        if (!(horizon > 0.0))
            throw std::invalid_argument("time grid horizon T must be > 0");
        if (n_steps == 0)
            throw std::invalid_argument("time grid n_steps must be positive");
    }

    double dt() const { return horizon / static_cast<double>(n_steps); }
    double time(std::size_t j) const { return static_cast<double>(j) * dt(); }
    std::size_t n_nodes() const { return n_steps + 1; }

    // Index of the node at time t; t must lie on the grid.
    std::size_t index_of(double t) const {
        const double step = dt();
        const double guess = t / step;
        const auto j = static_cast<std::size_t>(guess + 0.5);
        if (j > n_steps || std::abs(t - static_cast<double>(j) * step) > 1e-9 * (horizon > 1.0 ? horizon : 1.0))
            throw std::invalid_argument("time does not lie on the grid");
        return j;
    }

    bool operator==(const TimeGrid& other) const {
        return horizon == other.horizon && n_steps == other.n_steps;
    }
};

} // namespace fakenews
