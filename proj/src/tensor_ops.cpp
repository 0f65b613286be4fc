#include "hhd/tensor_ops.hpp"

#include "hhd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hhd {

DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b) {
    require(a.shape() == b.shape(), ErrorCode::ShapeMismatch,
            "hadamard: shapes " + a.shape().to_string() + " and " + b.shape().to_string());
    DenseTensor out(a.shape());
    for (Index i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

namespace {

std::string index_to_string(const MultiIndex& idx) {
    std::string out = "(";
    for (Index k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k]);
    return out + ")";
}

}  // namespace

DenseTensor hadamard_inverse(const DenseTensor& a, double zero_tol) {
    DenseTensor out(a.shape());
    for (Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) <= zero_tol)
            fail(ErrorCode::ZeroEntry, "entry at " + index_to_string(a.shape().multi_index(i)) +
                                           " is within the zero tolerance");
        out[i] = 1.0 / a[i];
    }
    return out;
}

Rank1Tensor hadamard_rank1(const Rank1Tensor& a, const Rank1Tensor& b) {
    require(a.order() == b.order(), ErrorCode::ShapeMismatch, "rank-1 order mismatch");
    Rank1Tensor out;
    out.factors.resize(a.order());
    for (Index k = 0; k < a.order(); ++k) {
        require(a.factors[k].size() == b.factors[k].size(), ErrorCode::ShapeMismatch,
                "rank-1 factor length mismatch in mode " + std::to_string(k));
        out.factors[k].resize(a.factors[k].size());
        for (Index i = 0; i < a.factors[k].size(); ++i)
            out.factors[k][i] = a.factors[k][i] * b.factors[k][i];
    }
    return out;
}

Rank1Tensor unit_rank1(const Shape& shape) {
    Rank1Tensor one;
    one.factors.reserve(shape.order());
    for (Index k = 0; k < shape.order(); ++k)
        one.factors.emplace_back(shape.dim(k), 1.0);
    return one;
}

DenseTensor materialize(const Rank1Tensor& a) {
    const Shape shape = a.shape();
    DenseTensor out(shape);
    MultiIndex idx(shape.order(), 0);
    Index linear = 0;
    do {
        double v = 1.0;
        for (Index k = 0; k < shape.order(); ++k) v *= a.factors[k][idx[k]];
        out[linear++] = v;
    } while (next_multi_index(idx, shape));
    return out;
}

DenseTensor materialize(const Cpd& cpd) {
    cpd.validate();
    DenseTensor out(cpd.shape);
    MultiIndex idx(cpd.shape.order(), 0);
    Index linear = 0;
    do {
        double sum = 0.0;
        for (const auto& term : cpd.terms) {
            double v = 1.0;
            for (Index k = 0; k < cpd.shape.order(); ++k) v *= term.factors[k][idx[k]];
            sum += v;
        }
        out[linear++] = sum;
    } while (next_multi_index(idx, cpd.shape));
    return out;
}

DenseTensor materialize(const OrderedHhd& h) {
    h.validate();
    DenseTensor out = materialize(h.factors[0]);
    for (Index k = 1; k < h.factors.size(); ++k)
        out = hadamard(out, materialize(h.factors[k]));
    return out;
}

Rank1Permutation lexicographic_permutation(const MultiRank& ranks) {
    const Shape grid = ranks.as_shape();
    std::vector<MultiIndex> images;
    images.reserve(grid.element_count());
    MultiIndex idx(grid.order(), 0);
    do {
        images.push_back(idx);
    } while (next_multi_index(idx, grid));
    return Rank1Permutation(ranks, std::move(images));
}

std::pair<Cpd, Rank1Permutation> induced_cpd(const OrderedHhd& h) {
    h.validate();
    const MultiRank ranks = h.ranks();
    const Shape grid = ranks.as_shape();
    std::vector<Rank1Tensor> terms;
    terms.reserve(grid.element_count());
    MultiIndex idx(grid.order(), 0);
    do {
        Rank1Tensor term = h.factors[0].terms[idx[0]];
        for (Index k = 1; k < h.factors.size(); ++k)
            term = hadamard_rank1(term, h.factors[k].terms[idx[k]]);
        terms.push_back(std::move(term));
    } while (next_multi_index(idx, grid));
    return {Cpd(h.shape, std::move(terms)), lexicographic_permutation(ranks)};
}

DenseTensor flatten(const DenseTensor& t, const std::vector<std::vector<Index>>& groups) {
    const Index d = t.order();
    require(!groups.empty(), ErrorCode::InvalidPartition, "at least one group required");
    std::vector<bool> covered(d, false);
    for (const auto& g : groups) {
        require(!g.empty(), ErrorCode::InvalidPartition, "empty group");
        for (Index mode : g) {
            require(mode < d, ErrorCode::InvalidPartition, "mode out of range");
            require(!covered[mode], ErrorCode::InvalidPartition, "mode listed twice");
            covered[mode] = true;
        }
    }
    require(std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }),
            ErrorCode::InvalidPartition, "groups do not cover every mode");

    // Destination weight of each source mode: its row-major stride within its
    // group, times the stride of the group axis.
    std::vector<Index> group_sizes(groups.size());
    for (Index j = 0; j < groups.size(); ++j) {
        Index size = 1;
        for (Index mode : groups[j]) size *= t.shape().dim(mode);
        group_sizes[j] = size;
    }
    std::vector<Index> group_stride(groups.size());
    Index stride = 1;
    for (Index j = groups.size(); j-- > 0;) {
        group_stride[j] = stride;
        stride *= group_sizes[j];
    }
    std::vector<Index> weight(d, 0);
    for (Index j = 0; j < groups.size(); ++j) {
        Index within = 1;
        for (Index p = groups[j].size(); p-- > 0;) {
            weight[groups[j][p]] = within * group_stride[j];
            within *= t.shape().dim(groups[j][p]);
        }
    }

    DenseTensor out((Shape(group_sizes)));
    MultiIndex idx(d, 0);
    Index src = 0;
    do {
        Index dst = 0;
        for (Index k = 0; k < d; ++k) dst += idx[k] * weight[k];
        out[dst] = t[src++];
    } while (next_multi_index(idx, t.shape()));
    return out;
}

Index kruskal_rank(const std::vector<std::vector<double>>& vectors) {
    require(!vectors.empty(), ErrorCode::EmptyInput, "kruskal_rank of an empty list");
    const Index count = vectors.size();
    const Index dim = vectors[0].size();
    for (const auto& v : vectors)
        require(v.size() == dim, ErrorCode::ShapeMismatch, "vectors must have equal length");

    Eigen::MatrixXd all(dim, count);
    for (Index j = 0; j < count; ++j)
        for (Index i = 0; i < dim; ++i) all(static_cast<Eigen::Index>(i),
                                            static_cast<Eigen::Index>(j)) = vectors[j][i];

    // Largest j such that every j-subset has full numerical rank; scan upward
    // and stop at the first dependent subset.
    const Index cap = std::min(count, dim);
    for (Index j = 1; j <= cap; ++j) {
        std::vector<Index> subset(j);
        std::iota(subset.begin(), subset.end(), Index{0});
        bool more = true;
        while (more) {
            Eigen::MatrixXd sub(dim, j);
            for (Index c = 0; c < j; ++c)
                sub.col(static_cast<Eigen::Index>(c)) =
                    all.col(static_cast<Eigen::Index>(subset[c]));
            if (linalg::numerical_rank(sub) < static_cast<int>(j)) return j - 1;

            // next lexicographic combination of size j out of count
            more = false;
            for (Index k = j; k-- > 0;) {
                if (subset[k] + (j - k) < count) {
                    ++subset[k];
                    for (Index l = k + 1; l < j; ++l) subset[l] = subset[l - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return cap;
}

double relative_error(const DenseTensor& t, const DenseTensor& approx) {
    require(t.shape() == approx.shape(), ErrorCode::ShapeMismatch,
            "relative_error: shape mismatch");
    const double ref = t.frobenius_norm();
    require(ref > 0.0, ErrorCode::ZeroReference, "reference tensor has zero norm");
    double sum = 0.0;
    for (Index i = 0; i < t.size(); ++i) {
        const double diff = t[i] - approx[i];
        sum += diff * diff;
    }
    return std::sqrt(sum) / ref;
}

}  // namespace hhd
