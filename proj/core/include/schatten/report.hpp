#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schatten {

/// Output of a Schatten-p estimation run (plain Monte Carlo or Chebyshev).
///
/// Invariants: value == p_power_mean^(1/p) to roundoff, both nonnegative for
/// SPSD input, and p_power_mean equals the mean of `samples` (when retained).
struct EstimateReport {
    double value = 0.0;         // the Schatten-p estimate
    double p_power_mean = 0.0;  // the unbiased inner mean (estimate^p)
    std::vector<double> samples;  // per-sample quadratic forms; empty when streaming
    std::uint64_t matvecs = 0;  // operator applies consumed by this run
    double elapsed_s = 0.0;

    // Run context, echoed for reporting.
    double p = 0.0;
    std::string method;            // "mc" or "cheby"
    std::size_t num_samples = 0;   // M
    int degree = -1;               // Chebyshev degree N; -1 for plain mc
    std::uint64_t seed = 0;
    std::string distribution;
};

}  // namespace schatten
