#pragma once

#include <string>
#include <vector>

#include "homsim/cascade.hpp"
#include "homsim/matrix.hpp"
#include "homsim/quantum_system.hpp"
#include "homsim/time_grid.hpp"

namespace homsim {

// Two weakly coupled two-level sensor modes, one per emission line.
// Frequencies default to the line positions in the two-photon frame
// (biexciton line at -delta_x, exciton line at +delta_x).
struct SensorParams {
    double g = 1e-3;              // ps^-1, perturbative coupling
    double gamma_s = 0.025414;    // ps^-1, calibrated linewidth (see calibration report)
    std::optional<double> omega_1;
    std::optional<double> omega_2;

    double line_1(const CascadeParams& c) const { return omega_1.value_or(-c.delta_x); }
    double line_2(const CascadeParams& c) const { return omega_2.value_or(+c.delta_x); }
};

enum class Transition { biexciton, exciton };

std::string to_string(Transition t);

// 12-dimensional composite (emitter x sensor1 x sensor2, sensors truncated
// at one excitation):
//   H = H_emitter + sum_j { w_j xi_j^dag xi_j + g [(s_xb + s_gx) xi_j^dag + h.c.] },
// channels = emitter channels + sqrt(gamma_s) xi_j. Both transitions couple
// to both sensors; detuning suppresses the cross terms.
QuantumSystem build_sensed_system(const CascadeParams& cascade, const SensorParams& sensors);

// Composite-space operators for the sensed system (basis |emitter, n1, n2>,
// index = emitter*4 + n1*2 + n2).
ComplexMatrix sensor_lowering(int sensor);             // xi_j
ComplexMatrix sensor_number(int sensor);               // xi_j^dag xi_j
ComplexMatrix emitter_projector_sensed(int level);     // |l><l| x I x I
Eigen::Index sensed_initial_index();                   // |b,0,0>

// Per-transition photon number n(t) and first-order correlation g1(t,tau)
// of the matching sensor mode. n lives on the fine t grid; g1 rows are the
// strided t-slices (stride * t_grid.dt apart), columns the tau grid (which
// shares the fine grid spacing so t_i + tau_k lands on grid points).
struct EmissionFunctions {
    Transition transition = Transition::exciton;
    TimeGrid t_grid;
    TimeGrid tau_grid;
    std::size_t slice_stride = 1;
    std::vector<double> n;      // over fine t grid
    Eigen::MatrixXcd g1;        // n_slices x n_tau
};

struct EmissionOptions {
    std::size_t target_slices = 400;
    PropagatorOptions propagator{};
    unsigned threads = 1;
    // n(t_max) above this fraction of max n means the grid cuts the
    // emission tail and the run aborts.
    double truncation_tol = 1e-3;
};

// Evolution of the sensed system from |b,0,0> shared between the two lines.
struct SensedEvolution {
    TimeGrid t_grid;
    std::size_t slice_stride = 1;
    std::vector<double> n1, n2;             // sensor populations on fine grid
    std::vector<double> pop_b, pop_x;       // emitter populations on fine grid
    std::vector<ComplexMatrix> slices;      // rho at strided times
};

SensedEvolution evolve_sensed(const QuantumSystem& system, const TimeGrid& t_grid,
                              const EmissionOptions& opts = {});

// n(t) = <xi^dag xi>(t) from evolve, g1(t,tau) = <xi^dag(t) xi(t+tau)> by
// quantum regression. Errors when the grid truncates the emission.
EmissionFunctions compute_emission(const QuantumSystem& system, const TimeGrid& t_grid,
                                   const TimeGrid& tau_grid, Transition transition,
                                   const EmissionOptions& opts = {});

// Same, reusing an existing evolution (the HOM pipeline needs both lines).
EmissionFunctions compute_emission(const QuantumSystem& system, const SensedEvolution& evo,
                                   const TimeGrid& tau_grid, Transition transition,
                                   const EmissionOptions& opts = {});

}  // namespace homsim
