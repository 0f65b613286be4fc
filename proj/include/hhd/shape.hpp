#pragma once

#include "hhd/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hhd {

using Index = std::size_t;

/// Multi-index into a d-way array, 0-based, one entry per mode.
using MultiIndex = std::vector<Index>;

/// Extents (n_1,...,n_d) of a d-way array. Immutable after construction.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Index> dims);
    Shape(std::initializer_list<Index> dims) : Shape(std::vector<Index>(dims)) {}

    Index order() const noexcept { return dims_.size(); }
    Index dim(Index mode) const { return dims_.at(mode); }
    const std::vector<Index>& dims() const noexcept { return dims_; }

    /// Total number of entries, overflow-checked at construction.
    Index element_count() const noexcept { return element_count_; }

    /// Row-major linear offset of a multi-index (last mode fastest).
    Index linear_index(const MultiIndex& idx) const;

    /// Inverse of linear_index.
    MultiIndex multi_index(Index linear) const;

    bool operator==(const Shape& other) const noexcept { return dims_ == other.dims_; }
    bool operator!=(const Shape& other) const noexcept { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<Index> dims_;
    Index element_count_ = 0;
};

/// Advances a row-major multi-index through `shape`; returns false after the
/// last index wraps around to all zeros.
bool next_multi_index(MultiIndex& idx, const Shape& shape);

}  // namespace hhd
