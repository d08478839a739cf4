#include "rcs/stats.hpp"

#include <cmath>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>

#include "rcs/errors.hpp"

namespace rcs::stats {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw DomainError("interval needs at least one trial");
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

double chi_square_sf(double statistic, int df) {
    if (df < 1) throw DomainError("chi-square needs at least one degree of freedom");
    if (statistic <= 0.0) return 1.0;
    boost::math::chi_squared dist(static_cast<double>(df));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult two_sample_chi_square(const std::map<std::string, std::uint64_t>& counts_a,
                                      const std::map<std::string, std::uint64_t>& counts_b,
                                      std::uint64_t min_combined) {
    std::set<std::string> keys;
    for (const auto& [k, v] : counts_a) keys.insert(k);
    for (const auto& [k, v] : counts_b) keys.insert(k);

    auto get = [](const std::map<std::string, std::uint64_t>& m, const std::string& k) {
        auto it = m.find(k);
        return it == m.end() ? std::uint64_t{0} : it->second;
    };

    std::vector<std::pair<double, double>> cells;
    double rest_a = 0.0, rest_b = 0.0;
    for (const auto& k : keys) {
        double a = static_cast<double>(get(counts_a, k));
        double b = static_cast<double>(get(counts_b, k));
        if (a + b < static_cast<double>(min_combined)) {
            rest_a += a;
            rest_b += b;
        } else {
            cells.emplace_back(a, b);
        }
    }
    if (rest_a + rest_b > 0.0) cells.emplace_back(rest_a, rest_b);
    if (cells.size() < 2) throw DomainError("chi-square needs at least two categories");

    double total_a = 0.0, total_b = 0.0;
    for (const auto& [a, b] : cells) {
        total_a += a;
        total_b += b;
    }
    double total = total_a + total_b;
    if (total_a == 0.0 || total_b == 0.0) throw DomainError("chi-square needs non-empty samples");

    double stat = 0.0;
    for (const auto& [a, b] : cells) {
        double expect_a = (a + b) * total_a / total;
        double expect_b = (a + b) * total_b / total;
        stat += (a - expect_a) * (a - expect_a) / expect_a;
        stat += (b - expect_b) * (b - expect_b) / expect_b;
    }
    int df = static_cast<int>(cells.size()) - 1;
    return ChiSquareResult{stat, df, chi_square_sf(stat, df)};
}

}  // namespace rcs::stats
