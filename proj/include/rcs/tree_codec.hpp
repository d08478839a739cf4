#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcs/errors.hpp"

namespace rcs::codec {

/// Symbol codes for binary trees inside the full binary tree 2^<w.
///
/// Trit coding (alphabet {0,1,2}) describes trees without dead ends: each
/// symbol is the branching decision of the next extendible node, taken level
/// by level and lexicographically within a level.  0 keeps only the left
/// child, 1 only the right, 2 both.
///
/// Quad coding (alphabet {0,1,2,3}) describes Galton-Watson trees: symbols
/// 0..2 act as above and 3 marks a node whose subtree is dead.

using Symbol = std::uint8_t;

struct TritCode {
    std::vector<Symbol> symbols;

    TritCode() = default;
    explicit TritCode(std::vector<Symbol> s);

    static TritCode parse(std::string_view text);
    std::string str() const;

    std::size_t size() const { return symbols.size(); }
    bool operator==(const TritCode&) const = default;
};

struct QuadCode {
    std::vector<Symbol> symbols;

    QuadCode() = default;
    explicit QuadCode(std::vector<Symbol> s);

    static QuadCode parse(std::string_view text);
    std::string str() const;

    std::size_t size() const { return symbols.size(); }
    bool operator==(const QuadCode&) const = default;
};

/// Depth-bounded, prefix-closed set of binary strings.  Nodes are stored per
/// level in lexicographic order; level 0 is always {""} (the root).  Levels
/// above the extinction point of a quad-decoded tree may be empty.
class PrefixTree {
  public:
    explicit PrefixTree(int depth);

    // Validates prefix closure, root membership, and the depth bound.
    static PrefixTree from_nodes(int depth, std::vector<std::string> nodes);
    static PrefixTree from_levels(std::vector<std::vector<std::string>> levels);

    int depth() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<std::string>& level(int k) const;
    bool contains(std::string_view node) const;
    std::size_t node_count() const;

    // All nodes in level order; the canonical serialization order.
    std::vector<std::string> nodes() const;

    // True when every node of length < through_depth has a child.
    bool dead_end_free(int through_depth) const;

    // Restriction to levels 0..d (d <= depth()).
    PrefixTree restricted(int d) const;

    nlohmann::json to_json() const;
    static PrefixTree from_json(const nlohmann::json& j);

    bool operator==(const PrefixTree&) const = default;

  private:
    PrefixTree() = default;
    std::vector<std::vector<std::string>> levels_;
};

struct DecodeOutcome {
    PrefixTree tree;
    std::size_t consumed = 0;
    bool extinct = false;  // quad decoding only; trit trees never die
};

/// One symbol per call; nullopt once exhausted.  Samplers provide unbounded
/// sources so decoding at any depth consumes exactly what it needs.
class SymbolSource {
  public:
    virtual ~SymbolSource() = default;
    virtual std::optional<Symbol> next() = 0;
};

/// Level-by-level decoder.  After construction the frontier is {""}; each
/// step() consumes one symbol per frontier node (lexicographic order) and
/// replaces the frontier with the next level.
class LevelDecoder {
  public:
    explicit LevelDecoder(bool allow_death) : allow_death_(allow_death) {}

    const std::vector<std::string>& frontier() const { return frontier_; }
    const std::vector<Symbol>& consumed_symbols() const { return symbols_; }
    bool extinct() const { return frontier_.empty(); }

    // Throws CodeTooShort if the source dries up mid-level.
    void step(SymbolSource& source);

  private:
    bool allow_death_;
    std::vector<std::string> frontier_{std::string()};
    std::vector<Symbol> symbols_;
};

DecodeOutcome decode_trit(const TritCode& code, int depth);
DecodeOutcome decode_quad(const QuadCode& code, int depth);

// Streaming variants used by the samplers.
DecodeOutcome decode_trit(SymbolSource& source, int depth);
DecodeOutcome decode_quad(SymbolSource& source, int depth);

TritCode encode_trit(const PrefixTree& tree);

std::vector<std::string> paths_at_level(const PrefixTree& tree, int level);

}  // namespace rcs::codec
