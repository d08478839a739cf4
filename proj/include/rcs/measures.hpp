#pragma once

#include <array>
#include <cstdint>

#include "rcs/errors.hpp"
#include "rcs/tree_codec.hpp"

namespace rcs::measures {

/// Parameters of the Bernoulli measure on trit codes: symbol 0 has
/// probability p, symbol 1 has q, symbol 2 has 1-p-q.
struct BernoulliPair {
    double p;
    double q;

    BernoulliPair(double p_, double q_) : p(p_), q(q_) {
        if (!(p >= 0.0) || !(q >= 0.0) || !(p + q <= 1.0))
            throw DomainError("BernoulliPair requires p,q >= 0 and p+q <= 1");
    }
    bool symmetric() const { return p == q; }
};

/// Per-child survival probabilities of a Galton-Watson tree: a left child
/// survives with probability beta0, a right child with beta1.  Only the
/// supercritical-or-critical range beta0 + beta1 >= 1 is admitted.
struct SurvivalPair {
    double beta0;
    double beta1;

    SurvivalPair(double b0, double b1) : beta0(b0), beta1(b1) {
        if (!(beta0 > 0.0 && beta0 < 1.0) || !(beta1 > 0.0 && beta1 < 1.0))
            throw InvalidSurvival("survival probabilities must lie in (0,1)");
        if (!(beta0 + beta1 >= 1.0))
            throw InvalidSurvival("beta0 + beta1 must be at least 1");
    }
};

/// Per-node offspring distribution over {left only, right only, both,
/// neither}.  Not necessarily a product of independent child survivals:
/// the n-fold intersection process needs correlated children.
struct OffspringLaw {
    double a0, a1, a2, a3;

    OffspringLaw(double a0_, double a1_, double a2_, double a3_)
        : a0(a0_), a1(a1_), a2(a2_), a3(a3_) {
        if (!(a0 >= 0 && a1 >= 0 && a2 >= 0 && a3 >= 0))
            throw DomainError("offspring probabilities must be non-negative");
        double sum = a0 + a1 + a2 + a3;
        if (!(sum > 1.0 - 1e-12 && sum < 1.0 + 1e-12))
            throw DomainError("offspring probabilities must sum to 1");
    }
    std::array<double, 4> as_array() const { return {a0, a1, a2, a3}; }
};

/// Identifier of one reproducible random stream.  Identical
/// (master_seed, stream_index) pairs always yield identical draws, no matter
/// how trials are scheduled across threads.
struct RandomStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

/// Counter-based generator (splitmix64 over a per-stream key).  State is an
/// affine function of the draw counter, so streams can be created cheaply
/// per trial and never share state.
class StreamRng {
  public:
    explicit StreamRng(RandomStream stream);

    std::uint64_t next_u64();
    double next_unit();  // uniform in [0,1), 53-bit mantissa

  private:
    std::uint64_t state_;
};

double cylinder_measure(const BernoulliPair& params, const codec::TritCode& sigma);

OffspringLaw gw_offspring(const SurvivalPair& params);
SurvivalPair survival_from_bernoulli(const BernoulliPair& params);

codec::Symbol draw_trit(const BernoulliPair& params, StreamRng& rng);
codec::Symbol draw_quad(const OffspringLaw& law, StreamRng& rng);

codec::TritCode sample_trit_code(const BernoulliPair& params, std::size_t count,
                                 RandomStream stream);
codec::QuadCode sample_quad_code(const OffspringLaw& law, std::size_t count, RandomStream stream);

/// Unbounded symbol sources, for decode-on-demand sampling.
class TritSource final : public codec::SymbolSource {
  public:
    TritSource(const BernoulliPair& params, RandomStream stream) : params_(params), rng_(stream) {}
    std::optional<codec::Symbol> next() override { return draw_trit(params_, rng_); }

  private:
    BernoulliPair params_;
    StreamRng rng_;
};

class QuadSource final : public codec::SymbolSource {
  public:
    QuadSource(const OffspringLaw& law, RandomStream stream) : law_(law), rng_(stream) {}
    std::optional<codec::Symbol> next() override { return draw_quad(law_, rng_); }

  private:
    OffspringLaw law_;
    StreamRng rng_;
};

}  // namespace rcs::measures
