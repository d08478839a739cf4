#include <doctest.h>

#include <cmath>

#include "rcs/dimension.hpp"
#include "rcs/intersection.hpp"
#include "rcs/stats.hpp"

using namespace rcs;

TEST_CASE("dimension lower bound and its inverse") {
    CHECK(dim::dim_lower_bound(0.0) == 0.0);
    CHECK(dim::dim_lower_bound(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    double p3 = isect::threshold(3);
    CHECK(dim::dim_lower_bound(p3) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    for (double gamma = 0.0; gamma <= 1.0; gamma += 0.07) {
        double p = dim::gamma_to_p(gamma);
        CHECK(std::abs(dim::dim_lower_bound(p) - gamma) < 1e-12);
    }
    for (int n = 1; n <= 10; ++n)
        CHECK(std::abs(dim::gamma_to_p(1.0 / n) - isect::threshold(n)) < 1e-15);

    CHECK_THROWS_AS(dim::dim_lower_bound(0.6), DomainError);
    CHECK_THROWS_AS(dim::gamma_to_p(1.5), DomainError);
}

TEST_CASE("hinge identity: the dimension bound at threshold(n) is 1/n") {
    for (int n = 1; n <= 64; ++n)
        CHECK(std::abs(dim::dim_lower_bound(isect::threshold(n)) - 1.0 / n) < 1e-12);
}

TEST_CASE("member dimension bound sandwich") {
    CHECK(dim::member_dim_bound(1) == doctest::Approx(0.5));
    CHECK(dim::member_dim_bound(2) == doctest::Approx(1.0 / 3.0));

    for (double p = 0.004; p <= 0.5; p += 0.004) {
        auto rep = dim::dim_bound_report(p);
        CHECK(rep.member_bound <= rep.gamma + 1e-12);
        CHECK(rep.gamma < 1.0 / rep.degree + 1e-12);
    }
}

TEST_CASE("minimum degree for a dimension value") {
    auto a = dim::min_degree_for_dim(0.3);
    CHECK(a.k == 3);
    CHECK_FALSE(a.reciprocal_integer_caveat);
    auto b = dim::min_degree_for_dim(1.0);
    CHECK(b.k == 1);
    CHECK(b.reciprocal_integer_caveat);
    auto c = dim::min_degree_for_dim(0.5);
    CHECK(c.k == 2);
    CHECK(c.reciprocal_integer_caveat);
    CHECK_THROWS_AS(dim::min_degree_for_dim(0.0), DomainError);
    CHECK_THROWS_AS(dim::min_degree_for_dim(1.2), DomainError);
}

TEST_CASE("member paths") {
    auto zeros = dim::sample_member_path(0.0, 500, dim::PathPolicy::Leftmost, {3, 0});
    CHECK(zeros == std::string(500, '0'));

    const std::size_t n = 1'000'000;
    auto leftmost = dim::sample_member_path(0.3, n, dim::PathPolicy::Leftmost, {3, 1});
    double ones = static_cast<double>(std::count(leftmost.begin(), leftmost.end(), '1'));
    CHECK(std::abs(ones / n - 0.3) < 0.002);

    auto uniform = dim::sample_member_path(0.2, n, dim::PathPolicy::Uniform, {3, 2});
    double uones = static_cast<double>(std::count(uniform.begin(), uniform.end(), '1'));
    CHECK(std::abs(uones / n - 0.5) < 0.002);
}

TEST_CASE("leftmost member path bits look i.i.d. Bernoulli(p)") {
    const std::size_t n = 1'000'000;
    const double p = 0.3;
    auto path = dim::sample_member_path(p, n, dim::PathPolicy::Leftmost, {9, 0});
    // non-overlapping bigrams against the product law, 3 df
    double expect[4] = {(1 - p) * (1 - p), (1 - p) * p, p * (1 - p), p * p};
    std::uint64_t counts[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i + 1 < n; i += 2)
        counts[2 * (path[i] - '0') + (path[i + 1] - '0')]++;
    double total = static_cast<double>(n / 2);
    double stat = 0;
    for (int k = 0; k < 4; ++k) {
        double e = expect[k] * total;
        stat += (counts[k] - e) * (counts[k] - e) / e;
    }
    CHECK(stats::chi_square_sf(stat, 3) >= 1e-3);
}

TEST_CASE("LZ78 rate estimates") {
    CHECK_THROWS_AS(dim::estimate_dim(std::string(100, '0')), InputTooShort);
    CHECK_THROWS_AS(dim::estimate_dim(std::string(2000, 'x')), DomainError);

    SUBCASE("constant strings compress to a vanishing rate") {
        auto est = dim::estimate_dim(std::string(100000, '0'));
        // deterministic parse: 447 phrases, 3959 pointer+literal bits
        CHECK(est.phrase_count == 447);
        CHECK(est.code_length == 3959);
        CHECK(est.rate == doctest::Approx(0.03959).epsilon(1e-12));
        CHECK(est.rate < 0.05);
    }
    SUBCASE("fair-coin strings stay near rate 1 with finite-length redundancy") {
        auto bits = dim::sample_member_path(0.0, 100000, dim::PathPolicy::Uniform, {12, 0});
        auto est = dim::estimate_dim(bits);
        CHECK(est.rate > 0.95);
        CHECK(est.rate < 1.25);
    }
    SUBCASE("member path at p = 0.3 lands between the dimension bound and entropy + redundancy") {
        auto bits = dim::sample_member_path(0.3, 100000, dim::PathPolicy::Leftmost, {12, 1});
        auto est = dim::estimate_dim(bits);
        double h = 0.8812908992306927;  // binary entropy of 0.3
        CHECK(est.rate >= h - 0.05);
        CHECK(est.rate <= h + 0.20);
        CHECK(est.rate >= dim::dim_lower_bound(0.3));
    }
    SUBCASE("self-concatenation reuses the dictionary") {
        auto bits = dim::sample_member_path(0.3, 60000, dim::PathPolicy::Leftmost, {12, 2});
        auto once = dim::estimate_dim(bits);
        auto twice = dim::estimate_dim(bits + bits);
        CHECK(twice.rate <= once.rate + 0.01);
    }
}
