#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homsim/cascade.hpp"
#include "homsim/hom.hpp"
#include "homsim/sensor.hpp"

namespace homsim {

struct TrajectorySettings {
    std::size_t n_traj = 10000;
    std::uint64_t master_seed = 12345;
    double step_dt = 0.0;      // <= 0: automatic (1 percent norm-loss rule)
    double sample_dt = 5.0;    // ps, ensemble population sampling
};

struct RunConfig {
    CascadeParams cascade;
    SensorParams sensors;
    HomGrids grids;            // derived from defaults unless given
    TrajectorySettings trajectories;
    std::vector<double> postselect_cuts;
    double detector_fwhm = 0.0;  // ps, 0 = no convolution
    std::string output_dir = "out";
    unsigned threads = 1;

    std::uint64_t config_hash = 0;  // FNV-1a of the canonical JSON

    std::string provenance(std::uint64_t seed) const;
};

// Parses and validates a JSON config, applying defaults and rejecting
// unknown keys. All module invariants are revalidated here.
RunConfig parse_config(const std::string& path);

// The built-in defaults (paper lifetimes, calibrated sensor, no dephasing).
RunConfig default_config();

// 20-point logarithmic cutoff grid, 1 ps .. 5000 ps.
std::vector<double> default_cut_list();

}  // namespace homsim
