#include <doctest.h>

#include <cmath>

#include "rcs/galton_watson.hpp"

using namespace rcs;
using measures::OffspringLaw;
using measures::SurvivalPair;

TEST_CASE("survival recurrence matches hand-computed steps") {
    auto always = gw::survival_recurrence(OffspringLaw(0, 0, 1, 0), 5);
    for (double r : always.values) CHECK(r == 1.0);

    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    auto curve = gw::survival_recurrence(law, 200);
    CHECK(curve.at(0) == 1.0);
    CHECK(curve.at(1) == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(std::abs(curve.at(200) - 0.9375) < 1e-9);

    // non-increasing, bounded below by the limit for supercritical laws
    double limit = gw::survival_limit(law);
    for (int k = 0; k < 200; ++k) {
        CHECK(curve.at(k + 1) <= curve.at(k));
        CHECK(curve.at(k) > limit);
    }
}

TEST_CASE("survival limit closed form") {
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    CHECK(std::abs(gw::survival_limit(law) - 0.9375) < 1e-12);

    auto critical = measures::gw_offspring(SurvivalPair(0.5, 0.5));
    CHECK(gw::survival_limit(critical) == 0.0);

    OffspringLaw pairlaw(0.28, 0.28, 0.36, 0.08);
    CHECK(gw::survival_limit(pairlaw) == doctest::Approx(7.0 / 9.0).epsilon(1e-12));

    CHECK_THROWS_AS(gw::survival_limit(OffspringLaw(0.5, 0.5, 0.0, 0.0)), DegenerateLaw);
}

TEST_CASE("supercritical curves stay strictly above the limit out to n = 500") {
    std::vector<OffspringLaw> laws;
    for (double b0 : {0.55, 0.65, 0.8, 0.95})
        for (double b1 : {0.6, 0.8, 0.99})
            if (b0 + b1 > 1.0) laws.push_back(measures::gw_offspring(SurvivalPair(b0, b1)));
    laws.push_back(OffspringLaw(0.28, 0.28, 0.36, 0.08));   // pair intersection at p=0.2
    laws.push_back(OffspringLaw(0.271125, 0.271125, 0.343, 0.11475));  // 3-fold at p=0.15
    for (const auto& law : laws) {
        double limit = gw::survival_limit(law);
        auto curve = gw::survival_recurrence(law, 500);
        // strictly above while the gap is still resolvable in binary64; the
        // iterated map's fixed point can land an ulp below the closed form
        for (int k = 0; k <= 10; ++k) REQUIRE(curve.at(k) > limit);
        for (int k = 11; k <= 500; ++k) REQUIRE(curve.at(k) >= limit - 1e-12);
    }
}

TEST_CASE("bernoulli -> survival -> offspring -> pruning recovers the pair") {
    for (auto [p, q] : {std::pair{0.2, 0.2}, std::pair{0.15, 0.25}, std::pair{0.05, 0.4}}) {
        auto survival = measures::survival_from_bernoulli(measures::BernoulliPair(p, q));
        auto law = measures::gw_offspring(survival);
        auto probs = gw::pruned_branch_probs_general(law);
        CHECK(probs.both == doctest::Approx(1 - p - q).epsilon(1e-12));
        CHECK(probs.left_only == doctest::Approx(p).epsilon(1e-12));
        CHECK(probs.right_only == doctest::Approx(q).epsilon(1e-12));
    }
}

TEST_CASE("survival limit is a fixed point of the recurrence step") {
    for (double b0 : {0.55, 0.7, 0.8, 0.95}) {
        for (double b1 : {0.6, 0.75, 0.9}) {
            if (b0 + b1 < 1.0) continue;
            auto law = measures::gw_offspring(SurvivalPair(b0, b1));
            double l = gw::survival_limit(law);
            double step = (law.a0 + law.a1) * l + law.a2 * (2 * l - l * l);
            CHECK(std::abs(step - l) < 1e-12);
        }
    }
}

TEST_CASE("pruned branch probabilities") {
    auto probs = gw::pruned_branch_probs(SurvivalPair(0.8, 0.8));
    CHECK(probs.both == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(probs.left_only == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(probs.right_only == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(probs.both + probs.left_only + probs.right_only == doctest::Approx(1.0));

    // recovering the Bernoulli pair from its survival parameters
    double p = 0.15, q = 0.25;
    auto recovered = gw::pruned_branch_probs(SurvivalPair(1 - q, 1 - p));
    CHECK(recovered.both == doctest::Approx(1 - p - q).epsilon(1e-12));
    CHECK(recovered.left_only == doctest::Approx(p).epsilon(1e-12));
    CHECK(recovered.right_only == doctest::Approx(q).epsilon(1e-12));

    auto critical = gw::pruned_branch_probs(SurvivalPair(0.5, 0.5));
    CHECK(critical.both == doctest::Approx(0.0));
    CHECK(critical.left_only == doctest::Approx(0.5));
}

TEST_CASE("general pruned branch probabilities extend the product form") {
    auto product = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    auto general = gw::pruned_branch_probs_general(product);
    auto direct = gw::pruned_branch_probs(SurvivalPair(0.8, 0.8));
    CHECK(general.both == doctest::Approx(direct.both).epsilon(1e-12));
    CHECK(general.left_only == doctest::Approx(direct.left_only).epsilon(1e-12));
    CHECK(general.right_only == doctest::Approx(direct.right_only).epsilon(1e-12));

    auto isect = gw::pruned_branch_probs_general(OffspringLaw(0.28, 0.28, 0.36, 0.08));
    CHECK(isect.both == doctest::Approx(0.28).epsilon(1e-12));
    CHECK(isect.left_only == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(isect.right_only == doctest::Approx(0.36).epsilon(1e-12));

    auto full = gw::pruned_branch_probs_general(OffspringLaw(0, 0, 1, 0));
    CHECK(full.both == 1.0);

    CHECK_THROWS_AS(gw::pruned_branch_probs_general(OffspringLaw(0.25, 0.25, 0.25, 0.25)),
                    SubcriticalLaw);
}

TEST_CASE("gw tree sampling") {
    auto full = gw::sample_gw_tree(OffspringLaw(0, 0, 1, 0), 3, {1, 0});
    CHECK(full.node_count() == 15);
    auto dead = gw::sample_gw_tree(OffspringLaw(0, 0, 0, 1), 5, {1, 1});
    CHECK(dead.node_count() == 1);

    // sampling equals decoding the same stream's quad code
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto tree = gw::sample_gw_tree(law, 6, {31, i});
        auto code = measures::sample_quad_code(law, 200, {31, i});
        CHECK(tree == codec::decode_quad(code, 6).tree);
    }

    CHECK_THROWS_AS(gw::sample_gw_tree(OffspringLaw(0, 0, 1, 0), 30, {1, 2}, 1000),
                    BudgetExceeded);
}

TEST_CASE("sampled survival frequency tracks the recurrence") {
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    auto curve = gw::survival_recurrence(law, 12);
    int hits = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        measures::StreamRng rng({555, static_cast<std::uint64_t>(i)});
        if (gw::sample_reaches_depth(law, 12, rng)) hits++;
    }
    CHECK(std::abs(hits / double(trials) - curve.at(12)) < 0.015);
}

TEST_CASE("pruning keeps exactly the ancestors of horizon nodes") {
    auto full = codec::decode_trit(codec::TritCode::parse("2222222222222222"), 3).tree;
    auto kept = gw::prune_to_depth(full, 3);
    REQUIRE(kept.has_value());
    CHECK(kept->tree == full);
    CHECK(kept->horizon == 3);

    auto partial = codec::PrefixTree::from_nodes(2, {"", "0", "1", "00"});
    auto pruned = gw::prune_to_depth(partial, 1);
    REQUIRE(pruned.has_value());
    CHECK(pruned->tree.restricted(1).nodes() == std::vector<std::string>{"", "0"});
    CHECK(pruned->tree.dead_end_free(1));

    auto extinct = codec::PrefixTree::from_nodes(2, {"", "0", "1"});
    CHECK_FALSE(gw::prune_to_depth(extinct, 1).has_value());
}

TEST_CASE("pruning is idempotent at a fixed horizon") {
    auto law = measures::gw_offspring(SurvivalPair(0.7, 0.75));
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto tree = gw::sample_gw_tree(law, 7, {77, i});
        auto once = gw::prune_to_depth(tree, 7);
        if (!once) continue;
        auto twice = gw::prune_to_depth(once->tree, 7);
        REQUIRE(twice.has_value());
        CHECK(twice->tree == once->tree);
    }
}

TEST_CASE("prune_code composes decode, prune, and encode") {
    // a full tree prunes to itself
    auto full = gw::prune_code(codec::QuadCode::parse("2222222"), 2, 2);
    REQUIRE(full.has_value());
    CHECK(*full == codec::TritCode::parse("222"));

    // right child dies immediately, left path continues
    auto left = gw::prune_code(codec::QuadCode::parse("20300"), 4, 2);
    REQUIRE(left.has_value());
    CHECK(*left == codec::TritCode::parse("00"));

    // with lexicographic node order the second symbol belongs to the left
    // child, so "23..." kills the left branch and keeps the right one
    auto right = gw::prune_code(codec::QuadCode::parse("23000"), 4, 2);
    REQUIRE(right.has_value());
    CHECK(*right == codec::TritCode::parse("10"));

    CHECK_FALSE(gw::prune_code(codec::QuadCode::parse("3"), 4, 2).has_value());
    CHECK_THROWS_AS(gw::prune_code(codec::QuadCode::parse("2"), 4, 2), CodeTooShort);
}
