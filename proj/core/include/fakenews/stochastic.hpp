#pragma once

#include <vector>

#include "fakenews/release_schedule.hpp"
#include "fakenews/rng.hpp"
#include "fakenews/sample_path.hpp"
#include "fakenews/time_grid.hpp"

namespace fakenews {

// Standard Brownian path on the grid: B_0 = 0, independent N(0, dt) increments.
SamplePath brownian_path(const TimeGrid& grid, RngStream& rng);

// Jump times of a Poisson(rate) process restricted to (0, horizon].
ReleaseSchedule poisson_release_times(double rate, double horizon, RngStream& rng);

// Axis-aligned truncation box; entries may be +/-infinity.
struct TruncationBox {
    std::vector<double> lower;
    std::vector<double> upper;
};

// Draw from N(center, std^2 * I) conditioned on the box, one rejection loop
// per dimension (dimensions are independent).
std::vector<double> sample_truncated_normal(const std::vector<double>& center, double stddev,
                                            const TruncationBox& box, RngStream& rng);

// Running left-point Ito sum of the integrand against the path's increments:
// I_{t_k} = sum_{j<k} h_j * (path_{j+1} - path_j), I_0 = 0.
SamplePath ito_integral(const std::vector<double>& integrand, const SamplePath& path);

} // namespace fakenews
