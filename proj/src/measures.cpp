#include "rcs/measures.hpp"

namespace rcs::measures {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

StreamRng::StreamRng(RandomStream stream)
    : state_(mix64(stream.master_seed ^ mix64(stream.stream_index + kGamma))) {}

std::uint64_t StreamRng::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double StreamRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double cylinder_measure(const BernoulliPair& params, const codec::TritCode& sigma) {
    double m = 1.0;
    for (codec::Symbol s : sigma.symbols) {
        switch (s) {
            case 0: m *= params.p; break;
            case 1: m *= params.q; break;
            default: m *= 1.0 - params.p - params.q; break;
        }
    }
    return m;
}

OffspringLaw gw_offspring(const SurvivalPair& params) {
    double b0 = params.beta0, b1 = params.beta1;
    return OffspringLaw(b0 * (1.0 - b1), b1 * (1.0 - b0), b0 * b1, (1.0 - b0) * (1.0 - b1));
}

SurvivalPair survival_from_bernoulli(const BernoulliPair& params) {
    return SurvivalPair(1.0 - params.q, 1.0 - params.p);
}

codec::Symbol draw_trit(const BernoulliPair& params, StreamRng& rng) {
    double u = rng.next_unit();
    if (u < params.p) return 0;
    if (u < params.p + params.q) return 1;
    return 2;
}

codec::Symbol draw_quad(const OffspringLaw& law, StreamRng& rng) {
    double u = rng.next_unit();
    if (u < law.a0) return 0;
    if (u < law.a0 + law.a1) return 1;
    if (u < law.a0 + law.a1 + law.a2) return 2;
    return 3;
}

codec::TritCode sample_trit_code(const BernoulliPair& params, std::size_t count,
                                 RandomStream stream) {
    StreamRng rng(stream);
    std::vector<codec::Symbol> symbols;
    symbols.reserve(count);
    for (std::size_t i = 0; i < count; ++i) symbols.push_back(draw_trit(params, rng));
    return codec::TritCode(std::move(symbols));
}

codec::QuadCode sample_quad_code(const OffspringLaw& law, std::size_t count, RandomStream stream) {
    StreamRng rng(stream);
    std::vector<codec::Symbol> symbols;
    symbols.reserve(count);
    for (std::size_t i = 0; i < count; ++i) symbols.push_back(draw_quad(law, rng));
    return codec::QuadCode(std::move(symbols));
}

}  // namespace rcs::measures
