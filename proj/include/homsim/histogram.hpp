#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homsim {

// Binned coincidence counts. Metadata defaults follow the 80 MHz repetition
// rate and the 3 ns interferometer delay.
struct CorrelationHistogram {
    double bin_width = 0.0;
    std::vector<double> centers;       // strictly increasing, uniform
    std::vector<std::uint64_t> counts;
    double rep_period = 12500.0;       // ps
    double interferometer_delay = 3000.0;  // ps

    void validate() const;
};

CorrelationHistogram load_histogram(const std::string& path);
void save_histogram(const CorrelationHistogram& hist, const std::string& path,
                    const std::string& provenance = {});

struct Peak {
    double center = 0.0;
    double area = 0.0;   // counts
    double error = 0.0;  // sqrt(area), Poisson
};

struct PeakReport {
    std::vector<Peak> peaks;
};

// Sums counts in [center - half_window, center + half_window] per peak.
// Windows must be disjoint and inside the histogram span.
PeakReport integrate_peaks(const CorrelationHistogram& hist, const std::vector<double>& centers,
                           double half_window);

struct ValueWithError {
    double value = 0.0;
    double error = 0.0;
};

struct HomMetrics {
    ValueWithError p0;
    ValueWithError visibility;
};

// p0 = A0/(A- + A+), nu = (0.5-p0)/(0.5+p0), first-order Poisson error
// propagation. Expects exactly three peaks ordered (-delay, 0, +delay).
HomMetrics hom_metrics(const PeakReport& report);

// g2(0) = central area / mean side-peak area over n_side peaks spaced by
// the repetition period on each side.
ValueWithError g2_zero(const CorrelationHistogram& hist, double peak_spacing, int n_side,
                       double half_window);

}  // namespace homsim
