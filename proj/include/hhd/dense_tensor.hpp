#pragma once

#include "hhd/shape.hpp"

#include <vector>

namespace hhd {

/// Dense d-way array of doubles in row-major order (first index slowest,
/// last index fastest).
class DenseTensor {
public:
    DenseTensor() = default;
    explicit DenseTensor(Shape shape)
        : shape_(std::move(shape)), data_(shape_.element_count(), 0.0) {}
    DenseTensor(Shape shape, std::vector<double> data);

    const Shape& shape() const noexcept { return shape_; }
    Index order() const noexcept { return shape_.order(); }
    Index size() const noexcept { return data_.size(); }

    double operator[](Index linear) const { return data_[linear]; }
    double& operator[](Index linear) { return data_[linear]; }

    double at(const MultiIndex& idx) const { return data_[shape_.linear_index(idx)]; }
    double& at(const MultiIndex& idx) { return data_[shape_.linear_index(idx)]; }

    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    double frobenius_norm() const;

    bool operator==(const DenseTensor& other) const noexcept {
        return shape_ == other.shape_ && data_ == other.data_;
    }

private:
    Shape shape_;
    std::vector<double> data_;
};

}  // namespace hhd
