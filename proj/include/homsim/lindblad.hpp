#pragma once

#include <functional>
#include <vector>

#include "homsim/matrix.hpp"
#include "homsim/quantum_system.hpp"
#include "homsim/time_grid.hpp"

namespace homsim {

// Right-hand side of the master equation,
//   -i[H,rho] + sum_k (C_k rho C_k^dag - 1/2 {C_k^dag C_k, rho}).
// rho must be Hermitian within 1e-10 and match the system dimension.
ComplexMatrix lindblad_rhs(const QuantumSystem& system, const ComplexMatrix& rho);

// Dense superoperator acting on column-major vec(rho), dim^2 x dim^2.
ComplexMatrix build_superoperator(const QuantumSystem& system);

struct PropagatorOptions {
    // Substeps per grid step as a power of two; -1 selects automatically from
    // a row-sum bound on ||L|| (||L||*dt_sub <= 0.1). 0 forces plain
    // single-step RK4 at the grid dt.
    int substep_pow = -1;
};

// One-grid-step RK4 transfer matrix for the (linear, time-invariant) master
// equation: M = (sum_{k<=4} (dt_sub L)^k / k!)^(2^m). Applying M is
// algebraically the same as running 2^m explicit RK4 substeps.
class Propagator {
  public:
    Propagator(const QuantumSystem& system, double dt, PropagatorOptions opts = {});

    Eigen::Index dim() const { return dim_; }
    double dt() const { return dt_; }
    int substep_pow() const { return substep_pow_; }

    void step(ComplexVector& v) const { v = m_ * v; }
    // Propagation of the dual (observable) vector: w -> M^T w.
    void step_dual(ComplexVector& w) const { w = mt_ * w; }

    const ComplexMatrix& matrix() const { return m_; }

  private:
    Eigen::Index dim_;
    double dt_;
    int substep_pow_;
    ComplexMatrix m_;
    ComplexMatrix mt_;
};

struct EvolveOptions {
    PropagatorOptions propagator{};
    // |Tr rho - 1| beyond this aborts with an error asking for a smaller dt.
    double trace_tol = 1e-6;
};

// Fixed-step RK4 integration of lindblad_rhs from rho0 (unit trace, PSD
// within 1e-10), sampled at every grid point.
std::vector<ComplexMatrix> evolve(const QuantumSystem& system, const ComplexMatrix& rho0,
                                  const TimeGrid& grid, const EvolveOptions& opts = {});

// Streaming variant: observer(i, vec_rho) is called at every grid point.
// Shares the stepping path with evolve().
void evolve_observe(const QuantumSystem& system, const ComplexMatrix& rho0, const TimeGrid& grid,
                    const std::function<void(std::size_t, const ComplexVector&)>& observer,
                    const EvolveOptions& opts = {});

}  // namespace homsim
