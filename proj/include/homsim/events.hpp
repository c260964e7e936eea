#pragma once

#include <limits>
#include <string>
#include <vector>

#include "homsim/histogram.hpp"

namespace homsim {

// Biexciton-gated HOM coincidence rows: biexciton detection time relative to
// the excitation sync and the HOM detector time difference.
struct ConditionedEvent {
    double t_b_detect = 0.0;  // ps, >= 0
    double tau_hom = 0.0;     // ps
};

struct ConditionedEventList {
    std::vector<ConditionedEvent> rows;
    double interferometer_delay = 3000.0;  // ps

    void validate() const;
};

ConditionedEventList load_events(const std::string& path);
void save_events(const ConditionedEventList& events, const std::string& path,
                 const std::string& provenance = {});

struct ConditionalHomResult {
    HomMetrics metrics;
    double kept_fraction = 0.0;
    std::size_t kept = 0;
};

// Keeps rows with t_b_detect <= window, bins tau_hom and applies
// hom_metrics on the (-delay, 0, +delay) peaks. window = infinity
// reproduces the unconditioned analysis bit for bit.
ConditionalHomResult conditional_hom(const ConditionedEventList& events, double window,
                                     double delay, double half_window, double bin_width = 25.0);

}  // namespace homsim
