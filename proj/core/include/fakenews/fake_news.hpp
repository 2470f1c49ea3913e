#pragma once

#include <optional>
#include <stdexcept>

#include "fakenews/release_schedule.hpp"
#include "fakenews/sample_path.hpp"

namespace fakenews {

enum class ShapeKind { Linear, DampedLinear };

// Onset profile m(u) of a single item of fake news, u units after release.
//   Linear:       m(u) = mu * u
//   DampedLinear: m(u) = mu * u * exp(-alpha * u)
// m(u) = 0 for u <= 0. The sign of mu is the direction of the manipulation.
struct FakeNewsShape {
    ShapeKind kind = ShapeKind::Linear;
    double mu = 0.0;
    double alpha = 0.0; // DampedLinear only

    static FakeNewsShape linear(double mu) { return {ShapeKind::Linear, mu, 0.0}; }
    static FakeNewsShape damped(double mu, double alpha) {
        if (!(alpha >= 0.0))
            throw std::invalid_argument("damping rate alpha must be >= 0");
        return {ShapeKind::DampedLinear, mu, alpha};
    }
};

double shape_value(const FakeNewsShape& shape, double u);

// dm/du for u > 0; 0 at u <= 0 (limit from below at the release instant).
double shape_slope(const FakeNewsShape& shape, double u);

// Release model: either a Poisson rate or a fixed schedule, never both.
struct FakeNewsSpec {
    FakeNewsShape shape;
    std::optional<double> rate;               // releases at Poisson jump times
    std::optional<ReleaseSchedule> schedule;  // releases at fixed times

    static FakeNewsSpec poisson(const FakeNewsShape& s, double lambda) {
        if (lambda < 0.0)
            throw std::invalid_argument("release rate must be >= 0");
        return {s, lambda, std::nullopt};
    }
    static FakeNewsSpec fixed(const FakeNewsShape& s, ReleaseSchedule times) {
        return {s, std::nullopt, std::move(times)};
    }
};

// F_{t_j} = sum_i m(t_j - tau_i); identically zero before the first release.
// All releases share one (mu, alpha) pair.
SamplePath fake_news_path(const FakeNewsShape& shape, const ReleaseSchedule& schedule,
                          const TimeGrid& grid);

// eta_{t_j} = sigma * x_true * t_j + B_{t_j} + F_{t_j}. With F == 0 this is
// the clean information process xi.
SamplePath information_path(double sigma, double x_true, const SamplePath& brownian,
                            const SamplePath& fake);

} // namespace fakenews
