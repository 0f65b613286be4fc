#include "hhd/dense_tensor.hpp"

#include <cmath>

namespace hhd {

DenseTensor::DenseTensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    require(data_.size() == shape_.element_count(), ErrorCode::ShapeMismatch,
            "data length does not match shape " + shape_.to_string());
}

double DenseTensor::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

}  // namespace hhd
