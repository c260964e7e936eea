#pragma once

#include "homsim/histogram.hpp"

namespace homsim {

struct LifetimeFit {
    double tau = 0.0;
    double tau_error = 0.0;  // from the likelihood curvature
    double amplitude = 0.0;
    double background = 0.0;
    double log_likelihood = 0.0;
    int iterations = 0;
};

// Poisson maximum-likelihood fit of A e^{-t/tau} + B per bin on
// [t_lo, t_hi]. Deterministic initialization: tau from the log-slope of the
// first/last quartile means, B from the tail median. Throws on
// non-convergence or when the range holds no decay.
LifetimeFit fit_lifetime(const CorrelationHistogram& hist, double t_lo, double t_hi);

}  // namespace homsim
