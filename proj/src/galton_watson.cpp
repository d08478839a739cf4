#include "rcs/galton_watson.hpp"

#include <algorithm>
#include <string>

namespace rcs::gw {

using codec::PrefixTree;
using codec::QuadCode;
using codec::Symbol;
using codec::TritCode;
using measures::OffspringLaw;
using measures::StreamRng;
using measures::SurvivalPair;

SurvivalCurve survival_recurrence(const OffspringLaw& law, int n) {
    if (n < 0) throw DomainError("recurrence length must be non-negative");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) + 1);
    double r = 1.0;
    values.push_back(r);
    for (int k = 0; k < n; ++k) {
        r = (law.a0 + law.a1) * r + law.a2 * (2.0 * r - r * r);
        values.push_back(r);
    }
    return SurvivalCurve{std::move(values), law};
}

double survival_limit(const OffspringLaw& law) {
    if (law.a2 == 0.0) throw DegenerateLaw("survival limit undefined for a2 = 0");
    return std::max(0.0, (law.a2 - law.a3) / law.a2);
}

BranchProbs pruned_branch_probs(const SurvivalPair& params) {
    return BranchProbs{params.beta0 + params.beta1 - 1.0, 1.0 - params.beta1,
                       1.0 - params.beta0};
}

BranchProbs pruned_branch_probs_general(const OffspringLaw& law) {
    if (!(law.a2 > law.a3))
        throw SubcriticalLaw("pruned branch probabilities need a supercritical law (a2 > a3)");
    return BranchProbs{law.a2 - law.a3, law.a0 + law.a3, law.a1 + law.a3};
}

PrefixTree sample_gw_tree(const OffspringLaw& law, int depth, measures::RandomStream stream,
                          std::size_t node_budget) {
    if (depth < 0) throw DomainError("tree depth must be non-negative");
    measures::QuadSource source(law, stream);
    codec::LevelDecoder dec(/*allow_death=*/true);
    std::vector<std::vector<std::string>> levels;
    levels.push_back(dec.frontier());
    std::size_t nodes = 1;
    for (int k = 0; k < depth && !dec.extinct(); ++k) {
        dec.step(source);
        nodes += dec.frontier().size();
        if (nodes > node_budget) throw BudgetExceeded(node_budget, k + 1);
        levels.push_back(dec.frontier());
    }
    levels.resize(static_cast<std::size_t>(depth) + 1);
    return PrefixTree::from_levels(std::move(levels));
}

namespace {

// Iterative depth-first survival check.  The stack holds remaining depths of
// pending subtrees; a subtree succeeds as soon as one branch reaches depth 0.
bool reaches_impl(const OffspringLaw& law, int depth, StreamRng& rng, std::size_t budget) {
    if (depth == 0) return true;
    std::vector<int> pending{depth};
    std::size_t drawn = 0;
    while (!pending.empty()) {
        int h = pending.back();
        pending.pop_back();
        if (++drawn > budget) throw BudgetExceeded(budget, depth - h);
        double u = rng.next_unit();
        int children;
        if (u < law.a0 + law.a1)
            children = 1;
        else if (u < law.a0 + law.a1 + law.a2)
            children = 2;
        else
            children = 0;
        if (children == 0) continue;
        if (h == 1) return true;  // a child exists at the target level
        for (int c = 0; c < children; ++c) pending.push_back(h - 1);
    }
    return false;
}

}  // namespace

bool sample_reaches_depth(const OffspringLaw& law, int depth, StreamRng& rng,
                          std::size_t node_budget) {
    if (depth < 0) throw DomainError("depth must be non-negative");
    return reaches_impl(law, depth, rng, node_budget);
}

std::optional<PrunedTree> prune_to_depth(const PrefixTree& tree, int readable_depth) {
    int horizon = tree.depth();
    if (readable_depth < 0 || readable_depth > horizon)
        throw DomainError("readable depth must lie in [0, horizon]");
    if (tree.level(horizon).empty()) return std::nullopt;

    // Walk upward from the horizon keeping exactly the ancestors of
    // horizon-level nodes.
    std::vector<std::vector<std::string>> kept(static_cast<std::size_t>(horizon) + 1);
    kept[static_cast<std::size_t>(horizon)] = tree.level(horizon);
    for (int k = horizon - 1; k >= 0; --k) {
        std::vector<std::string> parents;
        parents.reserve(kept[static_cast<std::size_t>(k) + 1].size());
        for (const auto& child : kept[static_cast<std::size_t>(k) + 1])
            parents.push_back(child.substr(0, static_cast<std::size_t>(k)));
        parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
        kept[static_cast<std::size_t>(k)] = std::move(parents);
    }
    return PrunedTree{PrefixTree::from_levels(std::move(kept)), horizon, readable_depth};
}

std::optional<TritCode> prune_code(const QuadCode& code, int horizon, int readable_depth) {
    if (readable_depth < 0 || readable_depth > horizon)
        throw DomainError("readable depth must lie in [0, horizon]");
    auto outcome = codec::decode_quad(code, horizon);
    if (outcome.extinct) return std::nullopt;
    auto pruned = prune_to_depth(outcome.tree, readable_depth);
    if (!pruned) return std::nullopt;
    return codec::encode_trit(pruned->tree.restricted(readable_depth));
}

}  // namespace rcs::gw
