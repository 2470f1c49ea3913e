#include "fakenews/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fakenews {

SamplePath brownian_path(const TimeGrid& grid, RngStream& rng) {
    grid.validate();
    SamplePath path(grid);
    const double step_sd = std::sqrt(grid.dt());
    double b = 0.0;
    path[0] = 0.0;
    for (std::size_t j = 1; j <= grid.n_steps; ++j) {
        b += step_sd * rng.gaussian();
        path[j] = b;
    }
    return path;
}

ReleaseSchedule poisson_release_times(double rate, double horizon, RngStream& rng) {
    if (rate < 0.0)
        throw std::invalid_argument("poisson rate must be >= 0");
    if (!(horizon > 0.0))
        throw std::invalid_argument("horizon must be > 0");
    ReleaseSchedule schedule;
    if (rate == 0.0)
        return schedule;
    double t = rng.exponential(rate);
    while (t <= horizon) {
        schedule.times.push_back(t);
        t += rng.exponential(rate);
    }
    return schedule;
}

std::vector<double> sample_truncated_normal(const std::vector<double>& center, double stddev,
                                            const TruncationBox& box, RngStream& rng) {
    if (!(stddev > 0.0))
        throw std::invalid_argument("truncated normal stddev must be > 0");
    if (box.lower.size() != center.size() || box.upper.size() != center.size())
        throw std::invalid_argument("truncation box dimension mismatch");
    for (std::size_t d = 0; d < center.size(); ++d) {
        if (!(box.lower[d] < box.upper[d]))
            throw std::invalid_argument("truncation bounds must satisfy lower < upper");
    }

    std::vector<double> out(center.size());
    for (std::size_t d = 0; d < center.size(); ++d) {
        double x;
        int attempts = 0;
        do {
            if (++attempts > 1000000)
                throw std::runtime_error("truncated normal rejection sampling stalled");
            x = center[d] + stddev * rng.gaussian();
        } while (x < box.lower[d] || x > box.upper[d]);
        out[d] = x;
    }
    return out;
}

SamplePath ito_integral(const std::vector<double>& integrand, const SamplePath& path) {
    if (integrand.size() != path.size())
        throw std::logic_error("integrand and path must share one time grid");
    SamplePath running(path.grid);
    double acc = 0.0;
    running[0] = 0.0;
    for (std::size_t j = 1; j < path.size(); ++j) {
        acc += integrand[j - 1] * (path[j] - path[j - 1]);
        running[j] = acc;
    }
    return running;
}

} // namespace fakenews
