#pragma once

#include <cstddef>
#include <vector>

namespace homsim {

// Uniform time grid in picoseconds. (t_max - t0)/dt must be an integer
// within 1e-9; construction throws otherwise.
struct TimeGrid {
    double t0 = 0.0;
    double t_max = 0.0;
    double dt = 0.0;

    TimeGrid() = default;
    TimeGrid(double t0_, double t_max_, double dt_);

    // Builds a grid with n_steps = ceil(t_max/dt_hint) so that dt divides
    // the span exactly.
    static TimeGrid from_span(double t_max, double dt_hint);

    std::size_t n_steps() const { return steps_; }    // intervals
    std::size_t n_points() const { return steps_ + 1; }
    double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    std::vector<double> times() const;

  private:
    std::size_t steps_ = 0;
};

}  // namespace homsim
