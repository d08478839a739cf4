#include "rcs/tree_codec.hpp"

#include <algorithm>
#include <map>

namespace rcs::codec {

namespace {

std::vector<Symbol> parse_symbols(std::string_view text, Symbol max) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > static_cast<char>('0' + max))
            throw DomainError(std::string("invalid code symbol '") + c + "'");
        out.push_back(static_cast<Symbol>(c - '0'));
    }
    return out;
}

std::string symbols_to_string(const std::vector<Symbol>& symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) out.push_back(static_cast<char>('0' + s));
    return out;
}

}  // namespace

TritCode::TritCode(std::vector<Symbol> s) : symbols(std::move(s)) {
    for (Symbol x : symbols)
        if (x > 2) throw DomainError("trit symbol out of range: " + std::to_string(x));
}

TritCode TritCode::parse(std::string_view text) { return TritCode(parse_symbols(text, 2)); }
std::string TritCode::str() const { return symbols_to_string(symbols); }

QuadCode::QuadCode(std::vector<Symbol> s) : symbols(std::move(s)) {
    for (Symbol x : symbols)
        if (x > 3) throw DomainError("quad symbol out of range: " + std::to_string(x));
}

QuadCode QuadCode::parse(std::string_view text) { return QuadCode(parse_symbols(text, 3)); }
std::string QuadCode::str() const { return symbols_to_string(symbols); }

PrefixTree::PrefixTree(int depth) {
    if (depth < 0) throw DomainError("tree depth must be non-negative");
    levels_.resize(static_cast<std::size_t>(depth) + 1);
    levels_[0].emplace_back();
}

PrefixTree PrefixTree::from_levels(std::vector<std::vector<std::string>> levels) {
    if (levels.empty() || levels[0] != std::vector<std::string>{std::string()})
        throw DomainError("level 0 must contain exactly the empty string");
    PrefixTree t;
    t.levels_ = std::move(levels);
    for (std::size_t k = 0; k < t.levels_.size(); ++k) {
        auto& lv = t.levels_[k];
        if (!std::is_sorted(lv.begin(), lv.end()))
            throw DomainError("level " + std::to_string(k) + " is not sorted");
        for (const auto& node : lv) {
            if (node.size() != k) throw DomainError("node \"" + node + "\" not at its level");
            if (k > 0 && !t.contains(std::string_view(node).substr(0, k - 1)))
                throw DomainError("node \"" + node + "\" lacks its parent");
        }
    }
    return t;
}

PrefixTree PrefixTree::from_nodes(int depth, std::vector<std::string> nodes) {
    if (depth < 0) throw DomainError("tree depth must be non-negative");
    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(depth) + 1);
    for (auto& node : nodes) {
        for (char c : node)
            if (c != '0' && c != '1') throw DomainError("node \"" + node + "\" is not binary");
        if (static_cast<int>(node.size()) > depth)
            throw DomainError("node \"" + node + "\" exceeds depth " + std::to_string(depth));
        levels[node.size()].push_back(std::move(node));
    }
    for (auto& lv : levels) {
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    }
    return from_levels(std::move(levels));
}

const std::vector<std::string>& PrefixTree::level(int k) const {
    if (k < 0 || k > depth()) throw LevelOutOfRange(k, depth());
    return levels_[static_cast<std::size_t>(k)];
}

bool PrefixTree::contains(std::string_view node) const {
    if (static_cast<int>(node.size()) > depth()) return false;
    const auto& lv = levels_[node.size()];
    return std::binary_search(lv.begin(), lv.end(), node,
                              [](std::string_view a, std::string_view b) { return a < b; });
}

std::size_t PrefixTree::node_count() const {
    std::size_t n = 0;
    for (const auto& lv : levels_) n += lv.size();
    return n;
}

std::vector<std::string> PrefixTree::nodes() const {
    std::vector<std::string> out;
    out.reserve(node_count());
    for (const auto& lv : levels_) out.insert(out.end(), lv.begin(), lv.end());
    return out;
}

bool PrefixTree::dead_end_free(int through_depth) const {
    if (through_depth > depth()) throw LevelOutOfRange(through_depth, depth());
    for (int k = 0; k < through_depth; ++k)
        for (const auto& node : levels_[static_cast<std::size_t>(k)])
            if (!contains(node + '0') && !contains(node + '1')) return false;
    return true;
}

PrefixTree PrefixTree::restricted(int d) const {
    if (d < 0 || d > depth()) throw LevelOutOfRange(d, depth());
    PrefixTree t;
    t.levels_.assign(levels_.begin(), levels_.begin() + d + 1);
    return t;
}

nlohmann::json PrefixTree::to_json() const {
    return nlohmann::json{{"depth", depth()}, {"nodes", nodes()}};
}

PrefixTree PrefixTree::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("depth") || !j.contains("nodes"))
        throw DomainError("tree JSON must be {\"depth\": d, \"nodes\": [...]}");
    return from_nodes(j.at("depth").get<int>(), j.at("nodes").get<std::vector<std::string>>());
}

void LevelDecoder::step(SymbolSource& source) {
    std::vector<std::string> next;
    next.reserve(frontier_.size() * 2);
    for (std::size_t i = 0; i < frontier_.size(); ++i) {
        auto symbol = source.next();
        if (!symbol) throw CodeTooShort(frontier_.size() - i);
        Symbol s = *symbol;
        if (s > 3 || (!allow_death_ && s > 2))
            throw DomainError("unexpected symbol " + std::to_string(s));
        symbols_.push_back(s);
        const std::string& node = frontier_[i];
        if (s == 0 || s == 2) next.push_back(node + '0');
        if (s == 1 || s == 2) next.push_back(node + '1');
    }
    frontier_ = std::move(next);
}

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

DecodeOutcome decode_impl(SymbolSource& source, int depth, bool allow_death) {
    if (depth < 0) throw DomainError("decode depth must be non-negative");
    LevelDecoder dec(allow_death);
    std::vector<std::vector<std::string>> levels;
    levels.push_back(dec.frontier());
    for (int k = 0; k < depth && !dec.extinct(); ++k) {
        dec.step(source);
        levels.push_back(dec.frontier());
    }
    levels.resize(static_cast<std::size_t>(depth) + 1);
    bool extinct = levels.back().empty();
    return DecodeOutcome{PrefixTree::from_levels(std::move(levels)),
                         dec.consumed_symbols().size(), extinct};
}

}  // namespace

DecodeOutcome decode_trit(SymbolSource& source, int depth) {
    return decode_impl(source, depth, /*allow_death=*/false);
}

DecodeOutcome decode_quad(SymbolSource& source, int depth) {
    return decode_impl(source, depth, /*allow_death=*/true);
}

DecodeOutcome decode_trit(const TritCode& code, int depth) {
    VectorSource source(code.symbols);
    return decode_trit(source, depth);
}

DecodeOutcome decode_quad(const QuadCode& code, int depth) {
    VectorSource source(code.symbols);
    return decode_quad(source, depth);
}

TritCode encode_trit(const PrefixTree& tree) {
    std::vector<Symbol> symbols;
    for (int k = 0; k < tree.depth(); ++k) {
        for (const auto& node : tree.level(k)) {
            bool left = tree.contains(node + '0');
            bool right = tree.contains(node + '1');
            if (left && right)
                symbols.push_back(2);
            else if (left)
                symbols.push_back(0);
            else if (right)
                symbols.push_back(1);
            else
                throw DeadEndPresent(node);
        }
    }
    return TritCode(std::move(symbols));
}

std::vector<std::string> paths_at_level(const PrefixTree& tree, int level) {
    return tree.level(level);
}

}  // namespace rcs::codec
