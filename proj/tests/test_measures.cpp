#include <doctest.h>

#include <array>
#include <cmath>

#include "rcs/measures.hpp"

using namespace rcs;
using measures::BernoulliPair;
using measures::OffspringLaw;
using measures::SurvivalPair;

TEST_CASE("cylinder measure multiplies symbol probabilities") {
    BernoulliPair sym(0.2, 0.2);
    CHECK(measures::cylinder_measure(sym, codec::TritCode::parse("")) == 1.0);
    CHECK(measures::cylinder_measure(sym, codec::TritCode::parse("2")) == doctest::Approx(0.6));
    BernoulliPair skew(0.1, 0.3);
    CHECK(measures::cylinder_measure(skew, codec::TritCode::parse("021")) ==
          doctest::Approx(0.018).epsilon(1e-12));

    // multiplicative under concatenation
    auto a = codec::TritCode::parse("0212");
    auto b = codec::TritCode::parse("110");
    auto ab = codec::TritCode::parse("0212110");
    CHECK(measures::cylinder_measure(skew, ab) ==
          doctest::Approx(measures::cylinder_measure(skew, a) *
                          measures::cylinder_measure(skew, b))
              .epsilon(1e-12));
}

TEST_CASE("offspring law from survival parameters") {
    auto law = measures::gw_offspring(SurvivalPair(0.8, 0.8));
    CHECK(law.a0 == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(law.a1 == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(law.a2 == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(law.a3 == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(law.a0 + law.a1 + law.a2 + law.a3 == doctest::Approx(1.0).epsilon(1e-12));

    auto nearly_full = measures::gw_offspring(SurvivalPair(1 - 1e-6, 1 - 1e-6));
    CHECK(std::abs(nearly_full.a2 - 1.0) < 1e-5);

    auto critical = measures::gw_offspring(SurvivalPair(0.5, 0.5));
    CHECK(critical.a0 == doctest::Approx(0.25));
    CHECK(critical.a1 == doctest::Approx(0.25));
    CHECK(critical.a2 == doctest::Approx(0.25));
    CHECK(critical.a3 == doctest::Approx(0.25));
}

TEST_CASE("survival parameters from Bernoulli parameters") {
    auto sp = measures::survival_from_bernoulli(BernoulliPair(0.2, 0.2));
    CHECK(sp.beta0 == doctest::Approx(0.8));
    CHECK(sp.beta1 == doctest::Approx(0.8));

    auto skew = measures::survival_from_bernoulli(BernoulliPair(0.3, 0.1));
    CHECK(skew.beta0 == doctest::Approx(0.9));
    CHECK(skew.beta1 == doctest::Approx(0.7));

    // the degenerate full tree lies outside the open interval
    CHECK_THROWS_AS(measures::survival_from_bernoulli(BernoulliPair(0.0, 0.0)), InvalidSurvival);
}

TEST_CASE("parameter invariants are enforced") {
    CHECK_THROWS_AS(BernoulliPair(-0.1, 0.2), DomainError);
    CHECK_THROWS_AS(BernoulliPair(0.6, 0.6), DomainError);
    CHECK_THROWS_AS(SurvivalPair(0.4, 0.4), InvalidSurvival);  // subcritical
    CHECK_THROWS_AS(SurvivalPair(1.0, 0.5), InvalidSurvival);
    CHECK_THROWS_AS(OffspringLaw(0.5, 0.5, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(OffspringLaw(-0.1, 0.5, 0.5, 0.1), DomainError);
}

TEST_CASE("point-mass samplers produce constant codes") {
    auto all2 = measures::sample_trit_code(BernoulliPair(0.0, 0.0), 64, {5, 0});
    for (auto s : all2.symbols) CHECK(s == 2);
    auto all0 = measures::sample_trit_code(BernoulliPair(1.0, 0.0), 64, {5, 1});
    for (auto s : all0.symbols) CHECK(s == 0);
    auto q2 = measures::sample_quad_code(OffspringLaw(0, 0, 1, 0), 64, {5, 2});
    for (auto s : q2.symbols) CHECK(s == 2);
    auto q3 = measures::sample_quad_code(OffspringLaw(0, 0, 0, 1), 64, {5, 3});
    for (auto s : q3.symbols) CHECK(s == 3);
}

TEST_CASE("samplers are reproducible and stream-independent") {
    auto a = measures::sample_trit_code(BernoulliPair(0.2, 0.3), 1000, {42, 7});
    auto b = measures::sample_trit_code(BernoulliPair(0.2, 0.3), 1000, {42, 7});
    CHECK(a == b);
    auto c = measures::sample_trit_code(BernoulliPair(0.2, 0.3), 1000, {42, 8});
    CHECK(a != c);
    auto d = measures::sample_trit_code(BernoulliPair(0.2, 0.3), 1000, {43, 7});
    CHECK(a != d);
}

TEST_CASE("empirical symbol frequencies follow the law") {
    const std::size_t n = 1'000'000;
    SUBCASE("trit sampler") {
        auto code = measures::sample_trit_code(BernoulliPair(0.2, 0.2), n, {2024, 0});
        std::array<std::size_t, 3> counts{};
        for (auto s : code.symbols) counts[s]++;
        CHECK(std::abs(counts[0] / double(n) - 0.2) < 0.002);
        CHECK(std::abs(counts[1] / double(n) - 0.2) < 0.002);
        CHECK(std::abs(counts[2] / double(n) - 0.6) < 0.002);
    }
    SUBCASE("quad sampler") {
        OffspringLaw law(0.16, 0.16, 0.64, 0.04);
        auto code = measures::sample_quad_code(law, n, {2024, 1});
        std::array<std::size_t, 4> counts{};
        for (auto s : code.symbols) counts[s]++;
        auto expect = law.as_array();
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(std::abs(counts[i] / double(n) - expect[i]) < 0.002);
    }
}
