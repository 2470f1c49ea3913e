#pragma once

#include <stdexcept>
#include <vector>

namespace fakenews {

// Sorted release times in (0, T]; may be empty.
struct ReleaseSchedule {
    std::vector<double> times;

    ReleaseSchedule() = default;
    explicit ReleaseSchedule(std::vector<double> ts) : times(std::move(ts)) { validate(); }

    void validate() const {
        double prev = 0.0;
        for (double t : times) {
            if (!(t > prev))
                throw std::invalid_argument("release times must be strictly increasing and > 0");
            prev = t;
        }
    }

    bool empty() const { return times.empty(); }
    std::size_t size() const { return times.size(); }
};

} // namespace fakenews
