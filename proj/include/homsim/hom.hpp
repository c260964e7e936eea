#pragma once

#include <vector>

#include "homsim/sensor.hpp"

namespace homsim {

// Time-integrated two-photon interference of two identical independent
// sources. tau axis is symmetric about 0.
struct HomResult {
    std::vector<double> tau;
    std::vector<double> g2_hom;
    std::vector<double> g2_baseline;  // interference term dropped
    double area_hom = 0.0;
    double area_baseline = 0.0;
    double p0 = 0.0;
    double visibility = 0.0;
};

// Symmetrized time-resolved HOM correlation
//   G2(t,tau) = 1/4 [ n(t)n(t+tau) + n(t+tau)n(t) - 2 Re{ g1(t,tau)^* g1(t,tau) } ]
//             = 1/2 [ n(t)n(t+tau) - |g1(t,tau)|^2 ]   (identical sources),
// integrated over t (trapezoid on the slice grid). The symmetrized 1/4 form
// is used instead of the single-ordering printed form because the latter
// goes negative at tau=0 for identical pure sources; after t-integration the
// two agree for identical sources. p0 = 0.5 * area(hom)/area(baseline).
HomResult hom_g2(const EmissionFunctions& em);

// Discrete convolution with a unit-area Gaussian of the given FWHM on the
// (uniform) tau grid; fwhm = 0 returns the input. Total area is preserved.
std::vector<double> convolve_detector(const std::vector<double>& curve, double dt, double fwhm);

struct SweepPoint {
    double tau_cb = 0.0;
    double tau_cx = 0.0;
    double p0_b = 0.0, visibility_b = 0.0;
    double p0_x = 0.0, visibility_x = 0.0;
};

struct HomGrids {
    TimeGrid t;
    TimeGrid tau;
};

// Default grids: t span 10*max(tau_b,tau_x), tau window 8*max(tau_b,tau_x),
// dt = min(tau_b, tau_x, 1/gamma_s)/50 snapped so both spans are exact
// multiples.
HomGrids default_grids(const CascadeParams& cascade, const SensorParams& sensors);

struct PipelinePoint {
    HomResult biexciton;
    HomResult exciton;
};

// Full sensor pipeline for one parameter point (both lines, one evolution).
PipelinePoint run_hom_pipeline(const CascadeParams& cascade, const SensorParams& sensors,
                               const HomGrids& grids, const EmissionOptions& opts = {});

// Pipeline per (tau_cb, tau_cx) grid point, both lines.
std::vector<SweepPoint> visibility_sweep(const CascadeParams& base, const SensorParams& sensors,
                                         const std::vector<double>& tau_cb_list,
                                         const std::vector<double>& tau_cx_list,
                                         const HomGrids& grids, const EmissionOptions& opts = {});

struct CalibrationRow {
    double gamma_s = 0.0;
    double p0_b = 0.0, visibility_b = 0.0;
    double p0_x = 0.0, visibility_x = 0.0;
    double p0_mean = 0.0;
};

struct CalibrationReport {
    std::vector<CalibrationRow> rows;
    double chosen_gamma_s = 0.0;  // argmin |p0_mean - target|
    double target_p0 = 0.15;
};

// No-dephasing pipeline per candidate linewidth; grids are rebuilt per
// candidate because the default dt tracks 1/gamma_s.
CalibrationReport calibrate_sensor_linewidth(const CascadeParams& cascade,
                                             const SensorParams& sensor_base,
                                             const std::vector<double>& gamma_s_candidates,
                                             double target_p0 = 0.15,
                                             const EmissionOptions& opts = {});

}  // namespace homsim
