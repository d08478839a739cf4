#include "rcs/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rcs::isect {

using codec::LevelDecoder;
using codec::QuadCode;
using codec::Symbol;
using codec::SymbolSource;
using codec::TritCode;
using measures::BernoulliPair;
using measures::OffspringLaw;
using measures::SurvivalPair;

namespace {

class VectorSource final : public SymbolSource {
  public:
    explicit VectorSource(const std::vector<Symbol>& symbols) : symbols_(symbols) {}
    std::optional<Symbol> next() override {
        if (pos_ >= symbols_.size()) return std::nullopt;
        return symbols_[pos_++];
    }

  private:
    const std::vector<Symbol>& symbols_;
    std::size_t pos_ = 0;
};

bool in_sorted(const std::vector<std::string>& level, const std::string& node) {
    return std::binary_search(level.begin(), level.end(), node);
}

}  // namespace

IntersectOutcome intersect_streams(std::span<SymbolSource* const> sources, int depth) {
    if (sources.size() < 2) throw DomainError("intersection needs at least two codes");
    if (depth < 0) throw DomainError("depth must be non-negative");

    std::vector<LevelDecoder> decoders(sources.size(), LevelDecoder(/*allow_death=*/false));
    std::vector<std::string> frontier{std::string()};  // intersection frontier
    std::vector<Symbol> out;

    int level = 0;
    for (; level < depth && !frontier.empty(); ++level) {
        for (std::size_t i = 0; i < sources.size(); ++i) decoders[i].step(*sources[i]);
        std::vector<std::string> next;
        next.reserve(frontier.size() * 2);
        for (const auto& node : frontier) {
            bool left = true, right = true;
            for (const auto& dec : decoders) {
                left = left && in_sorted(dec.frontier(), node + '0');
                right = right && in_sorted(dec.frontier(), node + '1');
                if (!left && !right) break;
            }
            if (left && right)
                out.push_back(2);
            else if (left)
                out.push_back(0);
            else if (right)
                out.push_back(1);
            else
                out.push_back(3);
            if (left) next.push_back(node + '0');
            if (right) next.push_back(node + '1');
        }
        frontier = std::move(next);
    }

    bool extinct = frontier.empty();
    // Trailing 3s after total extinction carry no information; pad so short
    // outputs still have `depth` symbols.
    while (extinct && out.size() < static_cast<std::size_t>(depth)) out.push_back(3);
    return IntersectOutcome{QuadCode(std::move(out)), extinct, level};
}

QuadCode intersect_many(std::span<const TritCode> codes, int depth) {
    if (codes.size() < 2) throw DomainError("intersection needs at least two codes");
    std::vector<VectorSource> sources;
    sources.reserve(codes.size());
    for (const auto& code : codes) sources.emplace_back(code.symbols);
    std::vector<SymbolSource*> ptrs;
    ptrs.reserve(sources.size());
    for (auto& s : sources) ptrs.push_back(&s);
    return intersect_streams(ptrs, depth).code;
}

QuadCode intersect_codes(const TritCode& x, const TritCode& y, int depth) {
    const TritCode pair[2] = {x, y};
    return intersect_many(pair, depth);
}

IntersectionParams induced_pair_params(const BernoulliPair& a, const BernoulliPair& b) {
    double p = a.p, q = a.q, r = b.p, s = b.q;
    BernoulliPair induced(p + r - p * r, q + s - q * s);
    SurvivalPair survival((1.0 - s) * (1.0 - q), (1.0 - r) * (1.0 - p));
    return IntersectionParams{{a, b}, induced, survival};
}

OffspringLaw pair_symbol_law(const BernoulliPair& a, const BernoulliPair& b) {
    double p = a.p, q = a.q, r = b.p, s = b.q;
    double c0 = p * r + p * (1 - r - s) + r * (1 - p - q);
    double c1 = q * s + q * (1 - r - s) + s * (1 - p - q);
    double c2 = (1 - p - q) * (1 - r - s);
    double c3 = p * s + q * r;
    return OffspringLaw(c0, c1, c2, c3);
}

OffspringLaw nfold_symbol_law(double p, int n) {
    if (!(p >= 0.0 && p < 0.5)) throw DomainError("nfold law needs p in [0, 1/2)");
    if (n < 1) throw DomainError("n must be at least 1");
    double keep_one = std::pow(1.0 - p, n);      // left survives in every tree
    double keep_both = std::pow(1.0 - 2.0 * p, n);
    double a0 = keep_one - keep_both;
    double a3 = 1.0 - 2.0 * keep_one + keep_both;
    return OffspringLaw(a0, a0, keep_both, std::max(0.0, a3));
}

double f_n(double p, int n) {
    if (!(p >= 0.0 && p <= 0.5)) throw DomainError("f_n needs p in [0, 1/2]");
    if (n < 1) throw DomainError("n must be at least 1");
    if (n == 1) return p;  // exact, not 1-(1-p)
    return 1.0 - std::pow(1.0 - p, n);
}

double f_n_inverse(double p, int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (!(p >= 0.0 && p <= 1.0 - std::pow(2.0, -n)))
        throw DomainError("f_n inverse needs p in [0, 1-2^-n]");
    return 1.0 - std::pow(1.0 - p, 1.0 / n);
}

bool pair_nonempty_possible(double p, double q, double r, double s) {
    return p + q + r + s < 1.0 + p * r + q * s;
}

double pair_emptiness_prob(double p, double q, double r, double s) {
    if (!pair_nonempty_possible(p, q, r, s))
        throw DomainError("intersection is almost surely empty for these parameters");
    if (!(p + q < 1.0 && r + s < 1.0))
        throw DomainError("emptiness probability needs p+q < 1 and r+s < 1");
    return (p * s + q * r) / ((1.0 - p - q) * (1.0 - r - s));
}

double nfold_emptiness_prob(double p, int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (!(p >= 0.0 && p < threshold(n)))
        throw DomainError("emptiness probability needs p below threshold(n)");
    return 1.0 - (1.0 - 2.0 * f_n(p, n)) / std::pow(1.0 - 2.0 * p, n);
}

double threshold(int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    return -std::expm1(-std::numbers::ln2 / n);
}

DegreeReport degree_of_intersectability(double p) {
    if (!(p > 0.0 && p <= 0.5)) throw DomainError("degree needs p in (0, 1/2]");
    int n = 1;
    while (!(threshold(n + 1) <= p)) ++n;
    return DegreeReport{p, n, threshold(n + 1), threshold(n), n == 1};
}

bool polynomial_recurrence_check(double p, int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    double lhs = f_n(p, n + 1);
    double fn = f_n(p, n);
    double rhs = p + fn - p * fn;
    return std::abs(lhs - rhs) <= 1e-12;
}

}  // namespace rcs::isect
