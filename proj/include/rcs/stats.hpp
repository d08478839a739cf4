#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rcs::stats {

// Two-sided 99% normal quantile used for every confidence interval.
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
    double low;
    double high;
    double half_width() const { return (high - low) / 2.0; }
};

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

// Upper tail probability of the chi-squared distribution.
double chi_square_sf(double statistic, int df);

struct ChiSquareResult {
    double statistic;
    int df;
    double p_value;
};

/// Two-sample chi-square over matching category counts.  Categories whose
/// combined count is below `min_combined` are pooled into a remainder bucket
/// so sparse cells cannot distort the statistic.
ChiSquareResult two_sample_chi_square(const std::map<std::string, std::uint64_t>& counts_a,
                                      const std::map<std::string, std::uint64_t>& counts_b,
                                      std::uint64_t min_combined = 10);

}  // namespace rcs::stats
