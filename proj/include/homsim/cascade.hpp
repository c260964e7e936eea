#pragma once

#include <optional>

#include "homsim/matrix.hpp"
#include "homsim/quantum_system.hpp"

namespace homsim {

// Biexciton-exciton three-level system parameters. Times in ps, detuning in
// rad/ps. Coherence times are optional; absent means no pure dephasing.
struct CascadeParams {
    double tau_b = 237.16;
    double tau_x = 367.61;
    std::optional<double> tau_cb;
    std::optional<double> tau_cx;
    double delta_x = 10.0;

    void validate() const;
};

// Rates derived from CascadeParams. gamma_* are population decay rates,
// Gamma_* the amplitude rates of the two-photon wavefunction (gamma/2);
// measured lifetimes are population lifetimes, so Gamma = 1/(2 tau) — the
// factor of 2 is a convention choice documented here once and used
// everywhere.
struct DerivedRates {
    double gamma_b = 0.0;
    double gamma_x = 0.0;
    double Gamma_b = 0.0;
    double Gamma_x = 0.0;
    double gamma_phi_b = 0.0;
    double gamma_phi_x = 0.0;
    double delta_x = 0.0;
};

// Pure dephasing from the two-level relation 1/tau_c = 1/(2 tau_life) + gamma_phi.
// Throws "above Fourier limit" when tau_c > 2 tau_life.
DerivedRates derive_rates(const CascadeParams& params);

// tau_c corresponding to a given fraction of the Fourier limit 2*tau_life.
double fourier_fraction_to_coherence(double fraction, double tau_life);

// Two-photon cascade amplitude
//   psi(t_b, t_x) = 2 sqrt(Gb Gx) e^{-Gb t_b} Theta(t_b) e^{-Gx (t_x-t_b)} Theta(t_x-t_b),
// in ps^-1 with amplitude rates G = 1/(2 tau).
Complex cascade_amplitude(double t_b, double t_x, const DerivedRates& rates);

// Purity of the exciton-photon reduced state, Gamma_b/(Gamma_b+Gamma_x).
// Ratio of rates only, so the amplitude/population convention drops out.
double exciton_purity(const DerivedRates& rates);

// (P_inf - p0)/(P_inf + p0) with P_inf = 0.5; requires 0 <= p0 <= 0.5.
double visibility_from_p0(double p0);

// Three-level emitter in the two-photon rotating frame:
// H = delta_x |x><x|, channels sqrt(gamma_b)|x><b|, sqrt(gamma_x)|g><x| and,
// when the rates are nonzero, sqrt(2 gamma_phi)|l><l| dephasing channels.
// Level order g=0, x=1, b=2; all pipelines start from |b><b| at t=0.
//
// The paper's full master equation lives in its (unavailable) supplement;
// this Lindblad structure is reconstructed from the main text.
QuantumSystem build_emitter_system(const CascadeParams& params);

inline constexpr int kGroundIndex = 0;
inline constexpr int kExcitonIndex = 1;
inline constexpr int kBiexcitonIndex = 2;

}  // namespace homsim
