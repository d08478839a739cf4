#include "rcs/dimension.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "rcs/intersection.hpp"

namespace rcs::dim {

double dim_lower_bound(double p) {
    if (!(p >= 0.0 && p <= 0.5)) throw DomainError("dimension bound needs p in [0, 1/2]");
    return -std::log2(1.0 - p);
}

double gamma_to_p(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in [0, 1]");
    return 1.0 - std::exp2(-gamma);
}

double member_dim_bound(int degree) {
    if (degree < 1) throw DomainError("degree must be at least 1");
    return 1.0 / (degree + 1.0);
}

DimBoundReport dim_bound_report(double p) {
    auto deg = isect::degree_of_intersectability(p);
    return DimBoundReport{p, dim_lower_bound(p), deg.degree, member_dim_bound(deg.degree)};
}

MinDegree min_degree_for_dim(double s) {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("dimension value must lie in (0, 1]");
    double inv = 1.0 / s;
    double nearest = std::round(inv);
    bool reciprocal = std::abs(inv - nearest) <= 1e-9 && nearest >= 1.0;
    int k = reciprocal ? static_cast<int>(nearest) : static_cast<int>(std::floor(inv));
    return MinDegree{k, reciprocal};
}

std::string sample_member_path(double p, std::size_t length, PathPolicy policy,
                               measures::RandomStream stream) {
    if (!(p >= 0.0 && p < 0.5)) throw DomainError("member path needs p in [0, 1/2)");
    if (length < 1) throw DomainError("path length must be at least 1");
    measures::StreamRng rng(stream);
    std::string path(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
        double u = rng.next_unit();
        char bit;
        if (u < 1.0 - 2.0 * p) {
            bit = (policy == PathPolicy::Leftmost) ? '0' : (rng.next_unit() < 0.5 ? '0' : '1');
        } else if (u < 1.0 - p) {
            bit = '0';  // left child only
        } else {
            bit = '1';  // right child only
        }
        path[i] = bit;
    }
    return path;
}

namespace {

// Binary LZ78 trie; children index 0 when absent.
struct TrieNode {
    std::uint32_t child[2] = {0, 0};
};

std::size_t pointer_bits(std::size_t phrase_ordinal) {
    // ceil(log2(t)) bits address the t-1 earlier phrases plus the empty one.
    if (phrase_ordinal <= 1) return 0;
    return static_cast<std::size_t>(std::bit_width(phrase_ordinal - 1));
}

}  // namespace

DimEstimate estimate_dim(std::string_view bits) {
    if (bits.size() < kMinDimInputLength)
        throw InputTooShort("dimension estimate needs at least " +
                            std::to_string(kMinDimInputLength) + " bits");
    for (char c : bits)
        if (c != '0' && c != '1') throw DomainError("input must be a binary string");

    std::vector<TrieNode> trie(1);  // node 0 = empty phrase
    std::size_t code_length = 0;
    std::size_t phrases = 0;
    std::uint32_t node = 0;
    for (char c : bits) {
        int b = c - '0';
        std::uint32_t next = trie[node].child[b];
        if (next != 0) {
            node = next;
            continue;
        }
        // New phrase: pointer to the matched prefix plus one literal bit.
        ++phrases;
        code_length += pointer_bits(phrases) + 1;
        trie[node].child[b] = static_cast<std::uint32_t>(trie.size());
        trie.emplace_back();
        node = 0;
    }
    if (node != 0) {  // partial final phrase
        ++phrases;
        code_length += pointer_bits(phrases) + 1;
    }
    return DimEstimate{bits.size(), code_length, phrases,
                       static_cast<double>(code_length) / static_cast<double>(bits.size())};
}

}  // namespace rcs::dim
