#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homsim/quantum_system.hpp"
#include "homsim/time_grid.hpp"

namespace homsim {

struct Jump {
    double time = 0.0;  // ps
    ChannelLabel channel = ChannelLabel::exciton_decay;
};

// One Monte Carlo wavefunction realization. Jump times are strictly
// increasing; populations (if sampled) are |<l|psi>|^2 on the grid.
struct TrajectoryRecord {
    std::uint64_t seed = 0;
    std::vector<Jump> jumps;
    std::optional<Eigen::MatrixXd> populations;  // n_levels x n_points

    std::optional<double> jump_time(ChannelLabel label) const;
};

struct TrajectoryOptions {
    // Internal stepping; <= 0 picks dt so the worst-case single-step norm
    // loss is below 1 percent.
    double step_dt = 0.0;
    bool record_populations = false;
    // A single-step squared-norm drop beyond this aborts (step too coarse).
    double max_step_drop = 0.05;
};

// Non-Hermitian evolution under H' = H - (i/2) sum C^dag C with collapses
// when |psi|^2 falls below a drawn r; channel k picked with probability
// proportional to <psi|C_k^dag C_k|psi>. Deterministic given the seed.
TrajectoryRecord run_trajectory(const QuantumSystem& system, std::uint64_t seed,
                                const TimeGrid& grid, const TrajectoryOptions& opts = {});

struct EnsemblePopulations {
    TimeGrid grid;
    Eigen::MatrixXd mean;       // n_levels x n_points
    Eigen::MatrixXd std_error;  // n_levels x n_points
    std::size_t n_traj = 0;
};

// Mean level populations with standard errors. Per-trajectory seeds derive
// from the master seed by counter; the block-ordered reduction makes the
// result independent of the worker count.
EnsemblePopulations ensemble_populations(const QuantumSystem& system, std::size_t n_traj,
                                         std::uint64_t master_seed, const TimeGrid& grid,
                                         unsigned threads = 1,
                                         const TrajectoryOptions& opts = {});

// Runs n_traj trajectories (jumps only) and returns the records.
std::vector<TrajectoryRecord> run_ensemble(const QuantumSystem& system, std::size_t n_traj,
                                           std::uint64_t master_seed, const TimeGrid& grid,
                                           unsigned threads = 1,
                                           const TrajectoryOptions& opts = {});

}  // namespace homsim
