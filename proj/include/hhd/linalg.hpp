#pragma once

#include <Eigen/Dense>

#include <vector>

namespace hhd::linalg {

/// Singular values of M in decreasing order. Tall-and-skinny or
/// short-and-wide inputs are reduced by a QR factorization of the long side
/// first, so only a small square SVD is ever computed.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Number of singular values above max(rows, cols) * eps * sigma_max.
int numerical_rank(const Eigen::MatrixXd& m);

/// Leading left singular vector pair (u, sigma*v) of M, i.e. the best
/// rank-one approximation M ~ u * (sigma*v)^T with ||u|| = 1.
void dominant_rank1(const Eigen::MatrixXd& m, Eigen::VectorXd& u, Eigen::VectorXd& sv);

}  // namespace hhd::linalg
