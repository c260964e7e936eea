#pragma once

#include <string>
#include <vector>

#include "homsim/matrix.hpp"

namespace homsim {

enum class ChannelLabel {
    biexciton_decay,
    exciton_decay,
    biexciton_dephasing,
    exciton_dephasing,
    sensor1_decay,
    sensor2_decay,
};

std::string to_string(ChannelLabel label);

// Collapse operator with the rate folded in: op = sqrt(rate) * jump operator.
struct CollapseChannel {
    ComplexMatrix op;
    ChannelLabel label;
};

// Hamiltonian (rad/ps) plus collapse channels (ps^-1/2) on a finite Hilbert
// space. The single object both the master-equation and trajectory engines
// consume. Immutable after construction.
class QuantumSystem {
  public:
    QuantumSystem(ComplexMatrix hamiltonian, std::vector<CollapseChannel> channels);

    Eigen::Index dim() const { return hamiltonian_.rows(); }
    const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
    const std::vector<CollapseChannel>& channels() const { return channels_; }

  private:
    ComplexMatrix hamiltonian_;
    std::vector<CollapseChannel> channels_;
};

}  // namespace homsim
