#include "rcs/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

namespace rcs::mc {

using measures::BernoulliPair;
using measures::OffspringLaw;
using measures::RandomStream;
using measures::StreamRng;

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs `trials` independent work items, merging per-thread accumulators in
/// chunk order so the result never depends on the thread count.
template <typename Acc, typename PerTrial>
Acc run_trials(std::uint64_t trials, unsigned threads, PerTrial per_trial) {
    if (threads <= 1 || trials < 2 * threads) {
        Acc acc{};
        for (std::uint64_t i = 0; i < trials; ++i) per_trial(i, acc);
        return acc;
    }
    std::vector<Acc> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = t * chunk;
        std::uint64_t hi = std::min(trials, lo + chunk);
        workers.emplace_back([&, t, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) per_trial(i, partial[t]);
        });
    }
    for (auto& w : workers) w.join();
    Acc acc{};
    for (auto& part : partial) acc.merge(part);
    return acc;
}

struct CountAcc {
    std::uint64_t hits = 0;
    void merge(const CountAcc& other) { hits += other.hits; }
};

EstimateRecord make_record(std::string name, std::uint64_t successes, std::uint64_t trials,
                           double exact, double tolerance, std::uint64_t seed) {
    auto ci = stats::wilson_interval(successes, trials);
    double value = static_cast<double>(successes) / static_cast<double>(trials);
    if (tolerance < 0.0) tolerance = ci.half_width() + 0.005;
    EstimateRecord rec;
    rec.name = std::move(name);
    rec.value = value;
    rec.trials = trials;
    rec.ci_low = ci.low;
    rec.ci_high = ci.high;
    rec.exact = exact;
    rec.tolerance = tolerance;
    rec.pass = std::abs(value - exact) <= tolerance;
    rec.master_seed = seed;
    return rec;
}

/// Per-level weights of the survival-status process: a child counts as
/// "present" only if it exists and its subtree reaches the horizon.  With
/// r = r_{h-1} the joint law of (left present, right present) is
///   both:  a2 r^2
///   left:  (a0 + a2 (1-r)) r
///   right: (a1 + a2 (1-r)) r
/// and the total is exactly r_h, so conditioning a surviving node on its own
/// survival divides by r_h.  Sampling this process is equivalent in law to
/// materializing the tree to the horizon and pruning it.
struct PrunedStepWeights {
    double both, left, right, norm;
};

std::vector<PrunedStepWeights> pruned_step_table(const OffspringLaw& law,
                                                 const gw::SurvivalCurve& curve, int horizon) {
    std::vector<PrunedStepWeights> table(static_cast<std::size_t>(horizon) + 1);
    for (int h = 1; h <= horizon; ++h) {
        double r = curve.at(h - 1);
        double both = law.a2 * r * r;
        double left = (law.a0 + law.a2 * (1.0 - r)) * r;
        double right = (law.a1 + law.a2 * (1.0 - r)) * r;
        table[static_cast<std::size_t>(h)] = {both, left, right, both + left + right};
    }
    return table;
}

// 0 = left only, 1 = right only, 2 = both (trit symbol values).
inline int draw_pruned_symbol(const PrunedStepWeights& w, StreamRng& rng, bool conditioned) {
    double u = rng.next_unit() * (conditioned ? w.norm : 1.0);
    if (u < w.both) return 2;
    if (u < w.both + w.left) return 0;
    if (u < w.norm) return 1;
    return 3;  // only reachable unconditioned: no surviving child
}

struct PrunedTrialResult {
    bool survived = false;
    std::array<std::uint64_t, 3> symbol_counts{};  // indexed by trit symbol
    std::string cylinder_key;                      // nodes at levels 1..3, "" unless requested
};

/// One conditional pruned tree read to `readable` levels.  The root draw is
/// unconditioned (callers discard extinct trials); every deeper node is
/// conditioned on its own survival, which its parent's draw already implies.
PrunedTrialResult sample_pruned_trial(const std::vector<PrunedStepWeights>& table, int horizon,
                                      int readable, StreamRng& rng, bool want_cylinder) {
    PrunedTrialResult res;
    int root = draw_pruned_symbol(table[static_cast<std::size_t>(horizon)], rng,
                                  /*conditioned=*/false);
    if (root == 3) return res;
    res.survived = true;
    res.symbol_counts[static_cast<std::size_t>(root)]++;

    int cyl_depth = want_cylinder ? std::min(3, readable - 1) : 0;
    std::vector<std::string> frontier;  // explicit paths while building the key
    if (root == 0 || root == 2) frontier.push_back("0");
    if (root == 1 || root == 2) frontier.push_back("1");

    std::string key;
    std::uint64_t frontier_count = frontier.size();
    for (int level = 1; level < readable && frontier_count > 0; ++level) {
        const auto& w = table[static_cast<std::size_t>(horizon - level)];
        if (level <= cyl_depth) {
            for (const auto& node : frontier) {
                key += node;
                key += ',';
            }
            key += '|';
        }
        bool track_paths = level < cyl_depth;
        std::vector<std::string> next;
        std::uint64_t next_count = 0;
        for (std::uint64_t i = 0; i < frontier_count; ++i) {
            int s = draw_pruned_symbol(w, rng, /*conditioned=*/true);
            res.symbol_counts[static_cast<std::size_t>(s)]++;
            next_count += (s == 2) ? 2 : 1;
            if (track_paths) {
                const std::string& node = frontier[i];
                if (s == 0 || s == 2) next.push_back(node + '0');
                if (s == 1 || s == 2) next.push_back(node + '1');
            }
        }
        frontier = std::move(next);
        frontier_count = next_count;
    }
    res.cylinder_key = std::move(key);
    return res;
}

/// Trit tree drawn from a Bernoulli measure, read the same way as the pruned
/// trials: pooled symbols over levels 0..readable-1 plus the cylinder key.
PrunedTrialResult sample_trit_trial(const BernoulliPair& params, int readable, StreamRng& rng,
                                    bool want_cylinder) {
    PrunedTrialResult res;
    res.survived = true;  // dead-end-free trees always reach any depth
    int cyl_depth = want_cylinder ? std::min(3, readable - 1) : 0;
    std::vector<std::string> frontier{std::string()};
    std::uint64_t frontier_count = 1;
    std::string key;
    for (int level = 0; level < readable && frontier_count > 0; ++level) {
        if (level >= 1 && level <= cyl_depth) {
            for (const auto& node : frontier) {
                key += node;
                key += ',';
            }
            key += '|';
        }
        bool track_paths = level < cyl_depth;
        std::vector<std::string> next;
        std::uint64_t next_count = 0;
        for (std::uint64_t i = 0; i < frontier_count; ++i) {
            codec::Symbol s = measures::draw_trit(params, rng);
            res.symbol_counts[s]++;
            next_count += (s == 2) ? 2 : 1;
            if (track_paths) {
                const std::string& node = frontier[i];
                if (s == 0 || s == 2) next.push_back(node + '0');
                if (s == 1 || s == 2) next.push_back(node + '1');
            }
        }
        frontier = std::move(next);
        frontier_count = next_count;
    }
    res.cylinder_key = std::move(key);
    return res;
}

struct PooledAcc {
    std::uint64_t survivors = 0;
    std::uint64_t extinct = 0;
    std::array<std::uint64_t, 3> symbols{};
    std::map<std::string, std::uint64_t> cylinders;

    void add(const PrunedTrialResult& r) {
        if (!r.survived) {
            extinct++;
            return;
        }
        survivors++;
        for (std::size_t i = 0; i < 3; ++i) symbols[i] += r.symbol_counts[i];
        if (!r.cylinder_key.empty()) cylinders[r.cylinder_key]++;
    }
    void merge(const PooledAcc& other) {
        survivors += other.survivors;
        extinct += other.extinct;
        for (std::size_t i = 0; i < 3; ++i) symbols[i] += other.symbols[i];
        for (const auto& [k, v] : other.cylinders) cylinders[k] += v;
    }
};

void check_bias_bound(const OffspringLaw& law, const gw::SurvivalCurve& curve, int horizon,
                      int readable) {
    double bias = curve.at(horizon - readable) - gw::survival_limit(law);
    if (!(bias < 0.005))
        throw DomainError("finite-horizon bias r_{d-m} - limit = " + std::to_string(bias) +
                          " is too large; increase the horizon");
}

}  // namespace

bool ExperimentReport::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    for (const auto& t : tests)
        if (!t.pass) return false;
    return true;
}

EstimateRecord estimate_survival(const OffspringLaw& law, int depth, std::uint64_t trials,
                                 std::uint64_t seed, double tolerance, const RunOptions& opt) {
    if (trials < 1) throw DomainError("need at least one trial");
    auto curve = gw::survival_recurrence(law, depth);
    auto acc = run_trials<CountAcc>(trials, opt.threads, [&](std::uint64_t i, CountAcc& a) {
        StreamRng rng(RandomStream{seed, i});
        if (gw::sample_reaches_depth(law, depth, rng, opt.node_budget)) a.hits++;
    });
    return make_record("survival_depth_" + std::to_string(depth), acc.hits, trials,
                       curve.at(depth), tolerance, seed);
}

EstimateRecord estimate_pair_emptiness(const BernoulliPair& a, const BernoulliPair& b, int depth,
                                       std::uint64_t trials, std::uint64_t seed, double tolerance,
                                       const RunOptions& opt) {
    if (trials < 1) throw DomainError("need at least one trial");
    auto law = isect::pair_symbol_law(a, b);
    double exact = 1.0 - gw::survival_recurrence(law, depth).at(depth);
    auto acc = run_trials<CountAcc>(trials, opt.threads, [&](std::uint64_t i, CountAcc& out) {
        measures::TritSource sa(a, RandomStream{seed, 2 * i});
        measures::TritSource sb(b, RandomStream{seed, 2 * i + 1});
        std::array<codec::SymbolSource*, 2> sources{&sa, &sb};
        if (isect::intersect_streams(sources, depth).extinct) out.hits++;
    });
    return make_record("pair_emptiness_depth_" + std::to_string(depth), acc.hits, trials, exact,
                       tolerance, seed);
}

EstimateRecord estimate_nfold_emptiness(double p, int n, int depth, std::uint64_t trials,
                                        std::uint64_t seed, NfoldMode mode, double tolerance,
                                        const RunOptions& opt) {
    if (trials < 1) throw DomainError("need at least one trial");
    if (n < 1) throw DomainError("n must be at least 1");
    if (!(p >= 0.0 && p < 0.5)) throw DomainError("p must lie in [0, 1/2)");
    auto law = isect::nfold_symbol_law(p, n);
    double exact = 1.0 - gw::survival_recurrence(law, depth).at(depth);

    CountAcc acc;
    if (mode == NfoldMode::Process) {
        acc = run_trials<CountAcc>(trials, opt.threads, [&](std::uint64_t i, CountAcc& out) {
            StreamRng rng(RandomStream{seed, i});
            if (!gw::sample_reaches_depth(law, depth, rng, opt.node_budget)) out.hits++;
        });
    } else if (n == 1) {
        // A single dead-end-free tree never empties.
        acc.hits = 0;
    } else {
        auto un = static_cast<std::uint64_t>(n);
        acc = run_trials<CountAcc>(trials, opt.threads, [&](std::uint64_t i, CountAcc& out) {
            BernoulliPair params(p, p);
            std::vector<measures::TritSource> sources;
            sources.reserve(un);
            for (std::uint64_t j = 0; j < un; ++j)
                sources.emplace_back(params, RandomStream{seed, i * un + j});
            std::vector<codec::SymbolSource*> ptrs;
            ptrs.reserve(un);
            for (auto& s : sources) ptrs.push_back(&s);
            if (isect::intersect_streams(ptrs, depth).extinct) out.hits++;
        });
    }
    std::string name = mode == NfoldMode::Process ? "nfold_emptiness_process" : "nfold_emptiness_tree";
    return make_record(name + "_depth_" + std::to_string(depth), acc.hits, trials, exact,
                       tolerance, seed);
}

ExperimentReport pruned_frequency_experiment(const OffspringLaw& law, int horizon, int readable,
                                             std::uint64_t trials, std::uint64_t seed,
                                             double tolerance, const RunOptions& opt) {
    if (trials < 1) throw DomainError("need at least one trial");
    if (readable < 1 || readable > horizon)
        throw DomainError("readable depth must lie in [1, horizon]");
    Stopwatch watch;
    auto curve = gw::survival_recurrence(law, horizon);
    check_bias_bound(law, curve, horizon, readable);
    auto table = pruned_step_table(law, curve, horizon);

    auto acc = run_trials<PooledAcc>(trials, opt.threads, [&](std::uint64_t i, PooledAcc& out) {
        StreamRng rng(RandomStream{seed, i});
        out.add(sample_pruned_trial(table, horizon, readable, rng, /*want_cylinder=*/false));
    });

    auto expected = gw::pruned_branch_probs_general(law);
    std::uint64_t total = acc.symbols[0] + acc.symbols[1] + acc.symbols[2];
    if (total == 0) throw InsufficientSurvivors(0, 1);

    ExperimentReport report;
    report.name = "pruned_frequency_experiment";
    report.parameters = {{"law", {law.a0, law.a1, law.a2, law.a3}},
                         {"horizon", horizon},
                         {"readable", readable},
                         {"trials", trials},
                         {"extinct_trials", acc.extinct}};
    report.master_seed = seed;
    report.records.push_back(
        make_record("freq_both", acc.symbols[2], total, expected.both, tolerance, seed));
    report.records.push_back(
        make_record("freq_left_only", acc.symbols[0], total, expected.left_only, tolerance, seed));
    report.records.push_back(make_record("freq_right_only", acc.symbols[1], total,
                                         expected.right_only, tolerance, seed));
    report.records.push_back(make_record("survival_rate", acc.survivors, trials, curve.at(horizon),
                                         kAutoTolerance, seed));
    report.runtime_seconds = watch.seconds();
    return report;
}

ExperimentReport converse_distribution_test(double p, int n, int horizon, int readable,
                                            std::uint64_t trials, std::uint64_t seed,
                                            double process_offset, double significance,
                                            const RunOptions& opt) {
    if (trials < 1) throw DomainError("need at least one trial");
    if (readable < 1 || readable > horizon)
        throw DomainError("readable depth must lie in [1, horizon]");
    if (!(p > 0.0 && p < isect::threshold(n)))
        throw DomainError("p must lie in (0, threshold(n))");
    double process_p = p + process_offset;
    if (!(process_p > 0.0 && process_p < isect::threshold(n)))
        throw DomainError("offset parameter must stay below threshold(n)");

    Stopwatch watch;
    double induced = isect::f_n(p, n);
    BernoulliPair reference(induced, induced);
    auto law = isect::nfold_symbol_law(process_p, n);
    auto curve = gw::survival_recurrence(law, horizon);
    check_bias_bound(law, curve, horizon, readable);
    auto table = pruned_step_table(law, curve, horizon);

    struct TwoSampleAcc {
        PooledAcc a;  // reference trit trees
        PooledAcc b;  // pruned n-fold intersections
        void merge(const TwoSampleAcc& other) {
            a.merge(other.a);
            b.merge(other.b);
        }
    };
    auto acc = run_trials<TwoSampleAcc>(trials, opt.threads, [&](std::uint64_t i, TwoSampleAcc& out) {
        StreamRng rng_a(RandomStream{seed, 2 * i});
        out.a.add(sample_trit_trial(reference, readable, rng_a, /*want_cylinder=*/true));
        StreamRng rng_b(RandomStream{seed, 2 * i + 1});
        out.b.add(sample_pruned_trial(table, horizon, readable, rng_b, /*want_cylinder=*/true));
    });

    constexpr std::uint64_t kMinSurvivors = 1000;
    if (acc.b.survivors < kMinSurvivors)
        throw InsufficientSurvivors(acc.b.survivors, kMinSurvivors);

    auto symbol_counts = [](const PooledAcc& pa) {
        std::map<std::string, std::uint64_t> m;
        m["0"] = pa.symbols[0];
        m["1"] = pa.symbols[1];
        m["2"] = pa.symbols[2];
        return m;
    };
    double each = significance / 2.0;  // two statistics, Bonferroni split
    auto symbol_test = stats::two_sample_chi_square(symbol_counts(acc.a), symbol_counts(acc.b));
    auto cylinder_test = stats::two_sample_chi_square(acc.a.cylinders, acc.b.cylinders);

    ExperimentReport report;
    report.name = "converse_distribution_test";
    report.parameters = {{"p", p},
                         {"n", n},
                         {"induced", induced},
                         {"process_p", process_p},
                         {"horizon", horizon},
                         {"readable", readable},
                         {"trials", trials},
                         {"survivors", acc.b.survivors}};
    report.master_seed = seed;
    report.tests.push_back(TestRecord{"symbol_chi_square", symbol_test.statistic, symbol_test.df,
                                      symbol_test.p_value, each, symbol_test.p_value >= each});
    report.tests.push_back(TestRecord{"cylinder_chi_square", cylinder_test.statistic,
                                      cylinder_test.df, cylinder_test.p_value, each,
                                      cylinder_test.p_value >= each});
    report.runtime_seconds = watch.seconds();
    return report;
}

nlohmann::json to_json(const EstimateRecord& r) {
    return {{"name", r.name},         {"value", r.value},
            {"trials", r.trials},     {"ci_low", r.ci_low},
            {"ci_high", r.ci_high},   {"exact", r.exact},
            {"tolerance", r.tolerance}, {"verdict", r.pass ? "pass" : "fail"},
            {"master_seed", r.master_seed}};
}

nlohmann::json to_json(const TestRecord& r) {
    return {{"name", r.name},
            {"statistic", r.statistic},
            {"df", r.df},
            {"p_value", r.p_value},
            {"significance", r.significance},
            {"verdict", r.pass ? "pass" : "fail"}};
}

nlohmann::json to_json(const ExperimentReport& r) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    nlohmann::json tests = nlohmann::json::array();
    for (const auto& t : r.tests) tests.push_back(to_json(t));
    return {{"name", r.name},       {"parameters", r.parameters},
            {"master_seed", r.master_seed}, {"records", records},
            {"tests", tests},       {"runtime_seconds", r.runtime_seconds}};
}

std::string to_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "kind,report,record,value,trials,ci_low,ci_high,exact,tolerance,"
           "statistic,df,p_value,significance,verdict,seed\n";
    for (const auto& rec : r.records) {
        out << "estimate," << r.name << ',' << rec.name << ',' << rec.value << ',' << rec.trials
            << ',' << rec.ci_low << ',' << rec.ci_high << ',' << rec.exact << ',' << rec.tolerance
            << ",,,,," << (rec.pass ? "pass" : "fail") << ',' << rec.master_seed << '\n';
    }
    for (const auto& t : r.tests) {
        out << "test," << r.name << ',' << t.name << ",,,,,,," << t.statistic << ',' << t.df << ','
            << t.p_value << ',' << t.significance << ',' << (t.pass ? "pass" : "fail") << ','
            << r.master_seed << '\n';
    }
    return out.str();
}

}  // namespace rcs::mc
