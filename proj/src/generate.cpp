#include "hhd/generate.hpp"

namespace hhd {

Rank1Tensor sample_rank1(const Shape& shape, Rng& rng) {
    Rank1Tensor term;
    term.factors.resize(shape.order());
    for (Index k = 0; k < shape.order(); ++k) {
        term.factors[k].resize(shape.dim(k));
        for (double& v : term.factors[k]) v = rng.normal();
    }
    return term;
}

Cpd sample_cpd(const Shape& shape, Index rank, Rng& rng) {
    std::vector<Rank1Tensor> terms;
    terms.reserve(rank);
    for (Index r = 0; r < rank; ++r) terms.push_back(sample_rank1(shape, rng));
    return Cpd(shape, std::move(terms));
}

OrderedHhd sample_hhd(const Shape& shape, const MultiRank& ranks, Rng& rng) {
    std::vector<Cpd> factors;
    factors.reserve(ranks.factor_count());
    for (Index k = 0; k < ranks.factor_count(); ++k)
        factors.push_back(sample_cpd(shape, ranks.ranks[k], rng));
    return OrderedHhd(shape, std::move(factors));
}

}  // namespace hhd
