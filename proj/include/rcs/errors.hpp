#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcs {

// Parameter or argument outside an operation's stated domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A code ran out of symbols before the requested depth was resolved.
// `missing` is the number of symbols still needed for the nodes already
// waiting in the current level (a lower bound on the true shortfall).
struct CodeTooShort : std::runtime_error {
    std::size_t missing;
    explicit CodeTooShort(std::size_t missing_)
        : std::runtime_error("code exhausted; at least " + std::to_string(missing_) +
                             " more symbol(s) required"),
          missing(missing_) {}
};

// A tree offered for trit encoding has an internal node with no child.
struct DeadEndPresent : std::runtime_error {
    explicit DeadEndPresent(const std::string& node)
        : std::runtime_error("tree has a dead end at internal node \"" + node + "\"") {}
};

struct LevelOutOfRange : std::out_of_range {
    LevelOutOfRange(int level, int depth)
        : std::out_of_range("level " + std::to_string(level) + " exceeds tree depth " +
                            std::to_string(depth)) {}
};

// Survival parameters outside (0,1) or with beta0 + beta1 < 1.
struct InvalidSurvival : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Offspring law with a2 = 0: no node ever has two children.
struct DegenerateLaw : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Offspring law with a2 <= a3: extinction is certain, pruned law undefined.
struct SubcriticalLaw : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tree generation outgrew the configured node budget.
struct BudgetExceeded : std::runtime_error {
    int level_reached;
    BudgetExceeded(std::size_t budget, int level_reached_)
        : std::runtime_error("node budget " + std::to_string(budget) +
                             " exceeded at level " + std::to_string(level_reached_)),
          level_reached(level_reached_) {}
};

struct InputTooShort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Conditioning left too few surviving trials to compare distributions.
struct InsufficientSurvivors : std::runtime_error {
    InsufficientSurvivors(std::size_t got, std::size_t need)
        : std::runtime_error("only " + std::to_string(got) + " surviving trials; need at least " +
                             std::to_string(need)) {}
};

}  // namespace rcs
