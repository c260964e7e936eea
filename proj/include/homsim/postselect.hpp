#pragma once

#include <optional>
#include <vector>

#include "homsim/cascade.hpp"
#include "homsim/trajectory.hpp"

namespace homsim {

struct PostselectionResult {
    double t_cut = 0.0;
    double kept_fraction = 0.0;
    std::vector<double> n_x_time;  // bin centers, ps
    std::vector<double> n_x;       // conditional exciton intensity (density)
    double overlap_V = 0.0;
    double overlap_se = 0.0;       // Monte Carlo standard error (trajectory mode)
    double visibility = 0.0;       // V/(2-V)
};

// Keeps records whose biexciton-decay jump is at or before t_cut and
// histograms the exciton jump times of the kept records (intensity part).
// Throws on an empty postselection.
PostselectionResult postselect_records(const std::vector<TrajectoryRecord>& records, double t_cut,
                                       const TimeGrid& hist_grid);

struct OracleOptions {
    double tolerance = 1e-4;   // refinement stops when V changes less
    int max_refinements = 8;
    double span_factor = 12.0; // integration span t_cut + span/gamma_x
};

// Deterministic quadrature for the conditional exciton-photon overlap:
// biexciton emission time weighted by the truncated exponential on
// [0, t_cut], conditional field kernel
//   g1(t,t'|t_b) = e^{-gamma_x (min-t_b)} e^{-(gamma_x/2+gamma_phi_x)|t-t'|},
// V = integral |G1|^2 / (integral of the diagonal)^2. Grid is refined until
// V moves by less than the tolerance.
double conditional_overlap_oracle(const CascadeParams& params, double t_cut,
                                  const OracleOptions& opts = {});

struct TrajectoryOverlap {
    double V = 0.0;
    double se = 0.0;
    std::size_t kept = 0;
};

// Same kernel quadrature with the biexciton-time integral replaced by the
// empirical distribution of kept trajectory jump times. Standard error from
// a delete-one-block jackknife over trajectory-index blocks (deterministic).
TrajectoryOverlap trajectory_overlap(const std::vector<double>& biexciton_jump_times,
                                     const CascadeParams& params, double t_cut,
                                     int n_blocks = 16);

enum class PostselectMode { oracle, trajectory };

struct CutoffCurveOptions {
    PostselectMode mode = PostselectMode::oracle;
    std::size_t n_traj = 10000;
    std::uint64_t master_seed = 12345;
    unsigned threads = 1;
    OracleOptions oracle{};
};

// nu(t_cut) = V/(2-V) per cutoff.
std::vector<PostselectionResult> visibility_vs_cutoff(const CascadeParams& params,
                                                      const std::vector<double>& t_cuts,
                                                      const CutoffCurveOptions& opts = {});

// The three standard parameter presets for the cutoff curves: no dephasing,
// both coherence times at 80 percent of the Fourier limit, and the
// experimental coherence times with a +-25 ps uncertainty band.
struct PostselectPresets {
    CascadeParams no_dephasing;
    CascadeParams fourier80;
    CascadeParams experimental;
    CascadeParams band_low;    // tau_c - 25 ps
    CascadeParams band_high;   // tau_c + 25 ps
};

PostselectPresets standard_presets(const CascadeParams& base);

}  // namespace homsim
