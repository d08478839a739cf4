#pragma once

#include <optional>
#include <vector>

#include "rcs/measures.hpp"
#include "rcs/tree_codec.hpp"

namespace rcs::gw {

/// Exact probabilities r_0, r_1, ..., r_n that the branching process reaches
/// each level, computed by the one-step recurrence
///   r_{k+1} = (a0 + a1) r_k + a2 (2 r_k - r_k^2),  r_0 = 1.
struct SurvivalCurve {
    std::vector<double> values;
    measures::OffspringLaw law;

    double at(int k) const { return values.at(static_cast<std::size_t>(k)); }
    int max_level() const { return static_cast<int>(values.size()) - 1; }
};

SurvivalCurve survival_recurrence(const measures::OffspringLaw& law, int n);

/// Non-extinction probability (a2 - a3) / a2, clamped at 0 for critical and
/// subcritical laws.  Throws DegenerateLaw when a2 = 0.
double survival_limit(const measures::OffspringLaw& law);

/// Branching probabilities of the dead-end-free tree left after pruning.
struct BranchProbs {
    double both;
    double left_only;
    double right_only;
};

BranchProbs pruned_branch_probs(const measures::SurvivalPair& params);

/// General-law form (a2 - a3, a0 + a3, a1 + a3).  Agrees with the product
/// form via beta0 = a0 + a2, beta1 = a1 + a2; needed because the n-fold
/// intersection law is not a product.  Throws SubcriticalLaw if a2 <= a3.
BranchProbs pruned_branch_probs_general(const measures::OffspringLaw& law);

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// Breadth-first generation, one offspring draw per surviving node, level by
/// level in lexicographic order.  Throws BudgetExceeded when the materialized
/// node count would pass the budget.
codec::PrefixTree sample_gw_tree(const measures::OffspringLaw& law, int depth,
                                 measures::RandomStream stream,
                                 std::size_t node_budget = kDefaultNodeBudget);

/// Lazily samples whether the process reaches `depth`, exploring subtrees
/// depth-first with short-circuit, so supercritical trees are never
/// materialized.  Draw order is deterministic for a given rng.
bool sample_reaches_depth(const measures::OffspringLaw& law, int depth, measures::StreamRng& rng,
                          std::size_t node_budget = kDefaultNodeBudget);

/// Finite-horizon pruning output.  `horizon` is the certification depth: a
/// node was kept iff it still had a descendant at that level.  Only levels
/// 0..readable_depth are guaranteed dead-end-free.
struct PrunedTree {
    codec::PrefixTree tree;
    int horizon;
    int readable_depth;
};

/// nullopt when no node reaches the horizon (the tree dies entirely).
std::optional<PrunedTree> prune_to_depth(const codec::PrefixTree& tree, int readable_depth);

/// decode_quad + prune_to_depth + encode_trit of the first `readable_depth`
/// levels; the finite-depth stand-in for the dead-end removal map on codes.
std::optional<codec::TritCode> prune_code(const codec::QuadCode& code, int horizon,
                                          int readable_depth);

}  // namespace rcs::gw
