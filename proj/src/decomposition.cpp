#include "hhd/decomposition.hpp"

#include <algorithm>
#include <limits>

namespace hhd {

Shape Rank1Tensor::shape() const {
    std::vector<Index> dims;
    dims.reserve(factors.size());
    for (const auto& f : factors) dims.push_back(f.size());
    return Shape(std::move(dims));
}

double Rank1Tensor::value_at(const MultiIndex& idx) const {
    require(idx.size() == factors.size(), ErrorCode::IndexOutOfRange,
            "multi-index order mismatch");
    double v = 1.0;
    for (Index k = 0; k < factors.size(); ++k) {
        require(idx[k] < factors[k].size(), ErrorCode::IndexOutOfRange,
                "index out of range in mode " + std::to_string(k));
        v *= factors[k][idx[k]];
    }
    return v;
}

bool Rank1Tensor::strictly_nonzero() const noexcept {
    for (const auto& f : factors)
        for (double v : f)
            if (v == 0.0) return false;
    return true;
}

Cpd::Cpd(Shape s, std::vector<Rank1Tensor> t) : shape(std::move(s)), terms(std::move(t)) {
    validate();
}

void Cpd::validate() const {
    for (const auto& term : terms) {
        require(term.order() == shape.order(), ErrorCode::ShapeMismatch,
                "term order does not match shape");
        for (Index k = 0; k < term.order(); ++k)
            require(term.factors[k].size() == shape.dim(k), ErrorCode::ShapeMismatch,
                    "factor length does not match shape in mode " + std::to_string(k));
    }
}

MultiRank::MultiRank(std::vector<Index> r) : ranks(std::move(r)) {
    require(!ranks.empty(), ErrorCode::InvalidArgument, "at least one rank required");
    for (Index rk : ranks) {
        require(rk >= 1, ErrorCode::InvalidArgument, "ranks must be positive");
        if (ranks.size() >= 2)
            require(rk >= 2, ErrorCode::InvalidArgument,
                    "every r_k must be at least 2 when m >= 2; drop rank-1 factors by "
                    "Hadamard-multiplying them into another factor");
    }
}

Index MultiRank::big_rank() const {
    Index product = 1;
    for (Index rk : ranks) {
        if (product > std::numeric_limits<Index>::max() / rk)
            fail(ErrorCode::Overflow, "big rank overflows");
        product *= rk;
    }
    return product;
}

OrderedHhd::OrderedHhd(Shape s, std::vector<Cpd> f) : shape(std::move(s)), factors(std::move(f)) {
    validate();
}

MultiRank OrderedHhd::ranks() const {
    std::vector<Index> r;
    r.reserve(factors.size());
    for (const auto& f : factors) r.push_back(f.rank());
    return MultiRank(std::move(r));
}

void OrderedHhd::validate() const {
    require(!factors.empty(), ErrorCode::InvalidArgument, "at least one Hadamard factor required");
    for (const auto& f : factors) {
        require(f.shape == shape, ErrorCode::ShapeMismatch,
                "Hadamard factor shape does not match");
        f.validate();
        if (factors.size() >= 2)
            require(f.rank() >= 2, ErrorCode::InvalidArgument,
                    "every Hadamard factor must have at least 2 terms when m >= 2");
    }
}

Rank1Permutation::Rank1Permutation(MultiRank r, std::vector<MultiIndex> im)
    : ranks(std::move(r)), images(std::move(im)) {
    validate();
}

void Rank1Permutation::validate() const {
    const Shape grid = ranks.as_shape();
    require(images.size() == grid.element_count(), ErrorCode::InvalidArgument,
            "image count must equal the product of the ranks");
    std::vector<bool> seen(images.size(), false);
    for (const auto& multi : images) {
        Index linear = grid.linear_index(multi);
        require(!seen[linear], ErrorCode::InvalidArgument, "images are not a bijection");
        seen[linear] = true;
    }
}

DenseTensor Rank1Permutation::apply(const std::vector<double>& values) const {
    require(values.size() == images.size(), ErrorCode::ShapeMismatch,
            "value count does not match permutation size");
    DenseTensor out(ranks.as_shape());
    for (Index i = 0; i < values.size(); ++i) out.at(images[i]) = values[i];
    return out;
}

std::vector<Index> Rank1Permutation::inverse_linear() const {
    const Shape grid = ranks.as_shape();
    std::vector<Index> inv(images.size());
    for (Index i = 0; i < images.size(); ++i) inv[grid.linear_index(images[i])] = i;
    return inv;
}

}  // namespace hhd
