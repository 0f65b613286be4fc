#include "hhd/shape.hpp"

#include <limits>
#include <sstream>

namespace hhd {

Shape::Shape(std::vector<Index> dims) : dims_(std::move(dims)) {
    require(!dims_.empty(), ErrorCode::InvalidArgument, "shape must have at least one mode");
    Index count = 1;
    for (Index n : dims_) {
        require(n >= 1, ErrorCode::InvalidArgument, "every mode extent must be positive");
        if (count > std::numeric_limits<Index>::max() / n)
            fail(ErrorCode::Overflow, "element count overflows");
        count *= n;
    }
    element_count_ = count;
}

Index Shape::linear_index(const MultiIndex& idx) const {
    require(idx.size() == dims_.size(), ErrorCode::IndexOutOfRange,
            "multi-index order does not match shape");
    Index linear = 0;
    for (Index k = 0; k < dims_.size(); ++k) {
        require(idx[k] < dims_[k], ErrorCode::IndexOutOfRange,
                "multi-index exceeds extent in mode " + std::to_string(k));
        linear = linear * dims_[k] + idx[k];
    }
    return linear;
}

MultiIndex Shape::multi_index(Index linear) const {
    require(linear < element_count_, ErrorCode::IndexOutOfRange, "linear index out of range");
    MultiIndex idx(dims_.size());
    for (Index k = dims_.size(); k-- > 0;) {
        idx[k] = linear % dims_[k];
        linear /= dims_[k];
    }
    return idx;
}

std::string Shape::to_string() const {
    std::ostringstream out;
    out << "(";
    for (Index k = 0; k < dims_.size(); ++k) out << (k ? "," : "") << dims_[k];
    out << ")";
    return out.str();
}

bool next_multi_index(MultiIndex& idx, const Shape& shape) {
    for (Index k = shape.order(); k-- > 0;) {
        if (++idx[k] < shape.dim(k)) return true;
        idx[k] = 0;
    }
    return false;
}

}  // namespace hhd
