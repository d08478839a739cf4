#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcs/galton_watson.hpp"
#include "rcs/intersection.hpp"
#include "rcs/measures.hpp"
#include "rcs/stats.hpp"

namespace rcs::mc {

/// One reproducible point estimate.  Every record is a pure function of its
/// parameters and master_seed; trials are keyed by (master_seed, trial index)
/// so the thread count never changes a number.
struct EstimateRecord {
    std::string name;
    double value = 0.0;
    std::uint64_t trials = 0;  // observations behind `value` (trees or pooled symbols)
    double ci_low = 0.0;       // 99% Wilson bounds
    double ci_high = 0.0;
    double exact = 0.0;  // oracle value this estimate is compared against
    double tolerance = 0.0;
    bool pass = false;  // |value - exact| <= tolerance
    std::uint64_t master_seed = 0;
};

/// One hypothesis-test verdict (chi-square comparisons).  Point-estimate
/// tolerance semantics do not fit p-values, hence the separate shape.
struct TestRecord {
    std::string name;
    double statistic = 0.0;
    int df = 0;
    double p_value = 0.0;
    double significance = 0.0;
    bool pass = false;  // p_value >= significance
};

struct ExperimentReport {
    std::string name;
    nlohmann::json parameters;
    std::uint64_t master_seed = 0;
    std::vector<EstimateRecord> records;
    std::vector<TestRecord> tests;
    double runtime_seconds = 0.0;

    bool all_pass() const;
};

struct RunOptions {
    unsigned threads = 1;
    std::size_t node_budget = gw::kDefaultNodeBudget;
};

// Negative tolerance means "use the default": CI half-width plus a 0.005
// systematic allowance.
inline constexpr double kAutoTolerance = -1.0;

/// Fraction of offspring-law processes with a node at depth d, against the
/// exact recurrence value r_d.
EstimateRecord estimate_survival(const measures::OffspringLaw& law, int depth,
                                 std::uint64_t trials, std::uint64_t seed,
                                 double tolerance = kAutoTolerance, const RunOptions& opt = {});

/// Samples two trit codes, intersects them, and tests for a depth-d node;
/// the exact value is 1 - r_d of the pair symbol law.
EstimateRecord estimate_pair_emptiness(const measures::BernoulliPair& a,
                                       const measures::BernoulliPair& b, int depth,
                                       std::uint64_t trials, std::uint64_t seed,
                                       double tolerance = kAutoTolerance,
                                       const RunOptions& opt = {});

enum class NfoldMode {
    Tree,     // sample n trit codes and intersect them explicitly
    Process,  // run the n-fold offspring-law process directly
};

EstimateRecord estimate_nfold_emptiness(double p, int n, int depth, std::uint64_t trials,
                                        std::uint64_t seed, NfoldMode mode,
                                        double tolerance = kAutoTolerance,
                                        const RunOptions& opt = {});

/// Pools trit symbols from levels 0..readable of pruned surviving trees and
/// compares the frequencies against the pruned branch probabilities.
/// Requires the finite-horizon bias r_{horizon-readable} - limit < 0.005.
ExperimentReport pruned_frequency_experiment(const measures::OffspringLaw& law, int horizon,
                                             int readable, std::uint64_t trials,
                                             std::uint64_t seed, double tolerance = 0.01,
                                             const RunOptions& opt = {});

/// Distributional check that pruned n-fold intersections look like trit codes
/// drawn from mu_{f_n(p)}: two-sample chi-square on pooled symbol counts and
/// on depth-<=3 cylinder frequencies, each at significance/2.  A nonzero
/// process_offset shifts only the intersection side (the power-check control).
ExperimentReport converse_distribution_test(double p, int n, int horizon, int readable,
                                            std::uint64_t trials, std::uint64_t seed,
                                            double process_offset = 0.0,
                                            double significance = 1e-3,
                                            const RunOptions& opt = {});

nlohmann::json to_json(const EstimateRecord& r);
nlohmann::json to_json(const TestRecord& r);
nlohmann::json to_json(const ExperimentReport& r);

/// CSV with the fixed column order
/// kind,report,record,value,trials,ci_low,ci_high,exact,tolerance,
/// statistic,df,p_value,significance,verdict,seed
std::string to_csv(const ExperimentReport& r);

}  // namespace rcs::mc
