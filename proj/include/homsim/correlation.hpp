#pragma once

#include <vector>

#include "homsim/lindblad.hpp"
#include "homsim/matrix.hpp"
#include "homsim/quantum_system.hpp"
#include "homsim/time_grid.hpp"

namespace homsim {

enum class RegressionMethod {
    // Propagate the dual vector of late_op once over the tau grid and take
    // inner products with every t-slice. Identical values to `forward`
    // (same transfer matrix, transposed), at a fraction of the cost.
    adjoint,
    // Re-propagate early_left * rho(t) * early_right over the tau grid for
    // each t-slice.
    forward,
};

struct CorrelationOptions {
    RegressionMethod method = RegressionMethod::adjoint;
    PropagatorOptions propagator{};
    unsigned threads = 1;
};

// Two-time correlation by the quantum regression theorem:
//   C(t_i, tau_k) = Tr[ late_op * Lambda_tau( early_left rho(t_i) early_right ) ].
// rho_slices are states from evolve() (possibly strided); tau_grid must start
// at 0 (negative tau is the caller's conjugate mirror). Row i of the result
// is the slice at t_i, column k the delay tau_k.
Eigen::MatrixXcd two_time_correlation(const QuantumSystem& system,
                                      const std::vector<ComplexMatrix>& rho_slices,
                                      const ComplexMatrix& late_op,
                                      const ComplexMatrix& early_left,
                                      const ComplexMatrix& early_right,
                                      const TimeGrid& tau_grid,
                                      const CorrelationOptions& opts = {});

}  // namespace homsim
