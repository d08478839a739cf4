#include <doctest.h>

#include <cmath>

#include "rcs/montecarlo.hpp"

using namespace rcs;
using measures::BernoulliPair;
using measures::OffspringLaw;
using measures::SurvivalPair;

TEST_CASE("survival estimate hits the recurrence oracle") {
    auto certain = mc::estimate_survival(OffspringLaw(0, 0, 1, 0), 10, 200, 1);
    CHECK(certain.value == 1.0);
    CHECK(certain.exact == 1.0);
    CHECK(certain.pass);

    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    auto rec = mc::estimate_survival(law, 12, 20000, 2);
    CHECK(std::abs(rec.value - rec.exact) < 0.01);
    CHECK(rec.pass);
    CHECK(rec.ci_low <= rec.value);
    CHECK(rec.value <= rec.ci_high);
}

TEST_CASE("estimates are reproducible and thread-count independent") {
    auto law = measures::gw_offspring(SurvivalPair(0.75, 0.8));
    auto a = mc::estimate_survival(law, 10, 5000, 77);
    auto b = mc::estimate_survival(law, 10, 5000, 77);
    CHECK(mc::to_json(a) == mc::to_json(b));
    auto c = mc::estimate_survival(law, 10, 5000, 77, mc::kAutoTolerance, {4});
    CHECK(mc::to_json(a) == mc::to_json(c));
    auto d = mc::estimate_survival(law, 10, 5000, 78);
    CHECK(a.value != d.value);
}

TEST_CASE("pair emptiness estimate") {
    BernoulliPair p(0.2, 0.2);
    auto rec = mc::estimate_pair_emptiness(p, p, 10, 4000, 5);
    CHECK(std::abs(rec.value - rec.exact) < 0.025);

    auto full = mc::estimate_pair_emptiness(BernoulliPair(0, 0), BernoulliPair(0.2, 0.25), 8,
                                            500, 6);
    CHECK(full.value == 0.0);
    CHECK(full.exact == 0.0);
}

TEST_CASE("n-fold emptiness modes agree within combined confidence intervals") {
    for (double p : {0.1, 0.2}) {
        auto tree = mc::estimate_nfold_emptiness(p, 2, 10, 4000, 9, mc::NfoldMode::Tree);
        auto process = mc::estimate_nfold_emptiness(p, 2, 10, 20000, 10, mc::NfoldMode::Process);
        CHECK(tree.exact == process.exact);
        double slack = (tree.ci_high - tree.ci_low) / 2 + (process.ci_high - process.ci_low) / 2;
        CHECK(std::abs(tree.value - process.value) <= slack);
    }
    auto single = mc::estimate_nfold_emptiness(0.3, 1, 10, 100, 11, mc::NfoldMode::Tree);
    CHECK(single.value == 0.0);
}

TEST_CASE("pruned frequency experiment matches the exact branch probabilities") {
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    auto report = mc::pruned_frequency_experiment(law, 25, 8, 20000, 13, 0.015);
    REQUIRE(report.records.size() == 4);
    for (const auto& rec : report.records) CHECK(rec.pass);

    // trivial law: every pruned node keeps both children
    auto full = mc::pruned_frequency_experiment(OffspringLaw(0, 0, 1, 0), 10, 4, 200, 14);
    CHECK(full.records[0].value == 1.0);  // both
    CHECK(full.records[1].value == 0.0);  // left only
    CHECK(full.records[2].value == 0.0);  // right only

    // the finite-horizon bias precondition is enforced
    CHECK_THROWS_AS(
        mc::pruned_frequency_experiment(measures::gw_offspring(SurvivalPair(0.52, 0.52)), 6, 5,
                                        100, 15),
        DomainError);
}

TEST_CASE("conditional pruned process agrees with materialize-then-prune sampling") {
    // dual route: the experiment's survival-status process vs literal
    // sample_gw_tree + prune_to_depth at a small horizon
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    const int horizon = 14, readable = 4;
    const std::uint64_t trials = 4000;

    std::array<std::uint64_t, 3> direct{};
    std::uint64_t survivors = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        auto tree = gw::sample_gw_tree(law, horizon, {21, i});
        auto pruned = gw::prune_to_depth(tree, readable);
        if (!pruned) continue;
        survivors++;
        auto code = codec::encode_trit(pruned->tree.restricted(readable));
        for (auto s : code.symbols) direct[s]++;
    }
    REQUIRE(survivors > trials / 2);

    auto report = mc::pruned_frequency_experiment(law, horizon, readable, trials, 22, 0.05);
    double total = 0;
    for (auto c : direct) total += static_cast<double>(c);
    // report records are ordered both, left, right; direct counts by symbol
    CHECK(std::abs(report.records[0].value - direct[2] / total) < 0.02);
    CHECK(std::abs(report.records[1].value - direct[0] / total) < 0.02);
    CHECK(std::abs(report.records[2].value - direct[1] / total) < 0.02);
}

TEST_CASE("asymmetric product-law pruned frequencies recover the Bernoulli pair") {
    auto law = measures::gw_offspring(
        measures::survival_from_bernoulli(BernoulliPair(0.15, 0.25)));
    auto report = mc::pruned_frequency_experiment(law, 25, 6, 20000, 17, 0.02);
    CHECK(std::abs(report.records[0].value - 0.60) < 0.02);
    CHECK(std::abs(report.records[1].value - 0.15) < 0.02);
    CHECK(std::abs(report.records[2].value - 0.25) < 0.02);
    CHECK(report.all_pass());
}

TEST_CASE("converse distribution test passes on matched laws and fails on offsets") {
    auto match = mc::converse_distribution_test(0.2, 2, 25, 6, 20000, 31);
    REQUIRE(match.tests.size() == 2);
    CHECK(match.all_pass());

    auto control = mc::converse_distribution_test(0.2, 2, 25, 6, 20000, 31, 0.03);
    CHECK_FALSE(control.all_pass());

    CHECK_THROWS_AS(mc::converse_distribution_test(0.25, 2, 25, 6, 100, 32, 0.05), DomainError);
}

TEST_CASE("confidence interval calibration over repeated seeds") {
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    int covered = 0;
    const int reps = 60;
    for (int rep = 0; rep < reps; ++rep) {
        auto rec = mc::estimate_survival(law, 10, 400, 9000 + static_cast<std::uint64_t>(rep));
        if (rec.ci_low <= rec.exact && rec.exact <= rec.ci_high) covered++;
    }
    CHECK(covered >= static_cast<int>(reps * 0.95));
}
