#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rcs/measures.hpp"

namespace rcs::dim {

/// All logarithms here are base 2: the survival parameter of a gamma-bound
/// tree is 2^-gamma, so -log2(1-p) is the dimension lower bound that makes
/// the threshold parameters evaluate to 1/n.

double dim_lower_bound(double p);  // -log2(1-p), p in [0, 1/2]
double gamma_to_p(double gamma);   // 1 - 2^-gamma, gamma in [0, 1]

double member_dim_bound(int degree);  // 1/(degree+1)

struct DimBoundReport {
    double p;
    double gamma;        // -log2(1-p)
    int degree;          // degree of intersectability at p
    double member_bound;  // 1/(degree+1)
};
DimBoundReport dim_bound_report(double p);

/// floor(1/s): the least degree of intersectability a random closed set
/// containing a dimension-s sequence can have.  When s is exactly a
/// reciprocal integer the lower-bound direction weakens by one; this is
/// surfaced as the caveat flag rather than a separate code path.
struct MinDegree {
    int k;
    bool reciprocal_integer_caveat;
};
MinDegree min_degree_for_dim(double s);

enum class PathPolicy { Uniform, Leftmost };

/// Walks the pruned symmetric tree law node by node: both children with
/// probability 1-2p, left only with p, right only with p.  Uniform policy
/// flips a fair coin at two-child steps; leftmost always walks left, so its
/// output is i.i.d. Bernoulli(p).
std::string sample_member_path(double p, std::size_t length, PathPolicy policy,
                               measures::RandomStream stream);

/// LZ78 compression rate: an upper-bound flavored stand-in for the
/// (uncomputable) Kolmogorov complexity rate.  Phrase t costs
/// ceil(log2(t)) + 1 bits; the rate converges to the entropy rate for
/// stationary ergodic sources, with substantial finite-length redundancy.
struct DimEstimate {
    std::size_t sequence_length;
    std::size_t code_length;
    std::size_t phrase_count;
    double rate;  // code_length / sequence_length
};
DimEstimate estimate_dim(std::string_view bits);

inline constexpr std::size_t kMinDimInputLength = 1024;

}  // namespace rcs::dim
