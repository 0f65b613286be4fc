#pragma once

#include "hhd/dense_tensor.hpp"
#include "hhd/shape.hpp"

#include <vector>

namespace hhd {

/// Outer product of d factor vectors, kept in factored form.
/// factors[k] has length shape.dim(k); the entry at a multi-index is the
/// product of the per-mode factor entries.
struct Rank1Tensor {
    std::vector<std::vector<double>> factors;

    Rank1Tensor() = default;
    explicit Rank1Tensor(std::vector<std::vector<double>> f) : factors(std::move(f)) {}

    Index order() const noexcept { return factors.size(); }
    Shape shape() const;

    double value_at(const MultiIndex& idx) const;

    /// True iff every factor entry is nonzero, i.e. the materialized tensor
    /// has no zero entries.
    bool strictly_nonzero() const noexcept;
};

/// Ordered sum of R rank-1 terms sharing one shape.
struct Cpd {
    Shape shape;
    std::vector<Rank1Tensor> terms;

    Cpd() = default;
    Cpd(Shape s, std::vector<Rank1Tensor> t);

    Index rank() const noexcept { return terms.size(); }
    void validate() const;
};

/// Rank parameters (r_1,...,r_m) of a Hadamard factorization together with
/// the derived product R.
struct MultiRank {
    std::vector<Index> ranks;

    MultiRank() = default;
    explicit MultiRank(std::vector<Index> r);

    Index factor_count() const noexcept { return ranks.size(); }
    Index big_rank() const;
    Shape as_shape() const { return Shape(ranks); }

    bool operator==(const MultiRank& other) const noexcept { return ranks == other.ranks; }
};

/// Hadamard product of m Hitchcock decompositions: factor k is an ordered
/// list of r_k rank-1 terms, and the induced tensor is the elementwise
/// product of the factor-wise sums.
struct OrderedHhd {
    Shape shape;
    std::vector<Cpd> factors;

    OrderedHhd() = default;
    OrderedHhd(Shape s, std::vector<Cpd> f);

    Index factor_count() const noexcept { return factors.size(); }
    MultiRank ranks() const;
    Index big_rank() const { return ranks().big_rank(); }
    void validate() const;
};

/// Bijection [R] -> [r_1] x ... x [r_m]; images[i] is the multi-index
/// assigned to position i.
struct Rank1Permutation {
    MultiRank ranks;
    std::vector<MultiIndex> images;

    Rank1Permutation() = default;
    Rank1Permutation(MultiRank r, std::vector<MultiIndex> im);

    Index size() const noexcept { return images.size(); }
    void validate() const;

    /// Rearranges `values` into a tensor of shape (r_1,...,r_m):
    /// result[images[i]] = values[i].
    DenseTensor apply(const std::vector<double>& values) const;

    /// inverse()[linear index of multi in the rank shape] = i.
    std::vector<Index> inverse_linear() const;
};

}  // namespace hhd
