#pragma once

#include <span>
#include <vector>

#include "rcs/measures.hpp"
#include "rcs/tree_codec.hpp"

namespace rcs::isect {

/// Everything the intersection of two Bernoulli-random closed sets induces:
/// the trit-code measure of the (pruned) intersection and the survival
/// parameters of the raw intersection process.
struct IntersectionParams {
    std::vector<measures::BernoulliPair> inputs;
    measures::BernoulliPair induced;
    measures::SurvivalPair survival;
};

/// Degree of intersectability: the largest n such that n mutually random
/// closed sets at this parameter can still meet.  p lands in
/// [threshold(n+1), threshold(n)); degree 1 is closed on the right at 1/2.
struct DegreeReport {
    double p;
    int degree;
    double interval_low;
    double interval_high;
    bool interval_closed_right;  // only for degree 1
};

/// Quad code of the node-set intersection, emitted level by level in
/// lexicographic order (symbol 3 at childless nodes; once the intersection
/// dies the output is padded with uninformative 3s up to `depth` symbols).
codec::QuadCode intersect_codes(const codec::TritCode& x, const codec::TritCode& y, int depth);
codec::QuadCode intersect_many(std::span<const codec::TritCode> codes, int depth);

/// Streaming form used by the Monte Carlo harness: decodes every input level
/// by level and stops as soon as the intersection dies.  Returns the quad
/// code plus the level reached by the intersection.
struct IntersectOutcome {
    codec::QuadCode code;
    bool extinct;
    int levels_completed;
};
IntersectOutcome intersect_streams(std::span<codec::SymbolSource* const> sources, int depth);

IntersectionParams induced_pair_params(const measures::BernoulliPair& a,
                                       const measures::BernoulliPair& b);

/// Joint per-node law of the pair intersection process (Cases 1-4 of the
/// two-tree machine):
///   a0 = pr + p(1-r-s) + r(1-p-q),   a1 = qs + q(1-r-s) + s(1-p-q),
///   a2 = (1-p-q)(1-r-s),             a3 = ps + qr.
measures::OffspringLaw pair_symbol_law(const measures::BernoulliPair& a,
                                       const measures::BernoulliPair& b);

/// Joint per-node law of the n-fold intersection of symmetric mu_p trees:
/// a2 = (1-2p)^n, a0 = a1 = (1-p)^n - (1-2p)^n, a3 = 1 - 2(1-p)^n + (1-2p)^n.
measures::OffspringLaw nfold_symbol_law(double p, int n);

double f_n(double p, int n);          // 1 - (1-p)^n on [0, 1/2]
double f_n_inverse(double p, int n);  // 1 - (1-p)^(1/n) on [0, 1-2^-n]

bool pair_nonempty_possible(double p, double q, double r, double s);
double pair_emptiness_prob(double p, double q, double r, double s);
double nfold_emptiness_prob(double p, int n);

double threshold(int n);  // 1 - 2^(-1/n)

DegreeReport degree_of_intersectability(double p);

/// Regression guard: f_{n+1}(p) == p + f_n(p) - p f_n(p) within 1e-12.
bool polynomial_recurrence_check(double p, int n);

}  // namespace rcs::isect
