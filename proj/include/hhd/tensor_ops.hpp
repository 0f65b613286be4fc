#pragma once

#include "hhd/decomposition.hpp"
#include "hhd/dense_tensor.hpp"

#include <utility>
#include <vector>

namespace hhd {

/// Elementwise (Hadamard) product. Loop order is fixed so that the result is
/// bit-identical regardless of argument order.
DenseTensor hadamard(const DenseTensor& a, const DenseTensor& b);

/// Elementwise reciprocal. Entries with |value| <= zero_tol raise ZeroEntry.
DenseTensor hadamard_inverse(const DenseTensor& a, double zero_tol = 0.0);

/// Hadamard product of two rank-1 tensors, computed factor by factor.
Rank1Tensor hadamard_rank1(const Rank1Tensor& a, const Rank1Tensor& b);

/// All-ones rank-1 tensor of the given shape.
Rank1Tensor unit_rank1(const Shape& shape);

DenseTensor materialize(const Rank1Tensor& a);
DenseTensor materialize(const Cpd& cpd);
DenseTensor materialize(const OrderedHhd& h);

/// Distributes the Hadamard product over the factor sums: returns the
/// R = prod r_k rank-1 terms A_{1,i_1} o ... o A_{m,i_m} listed in
/// lexicographic order of (i_1,...,i_m), together with the lexicographic
/// identification of positions and multi-indices.
std::pair<Cpd, Rank1Permutation> induced_cpd(const OrderedHhd& h);

/// Lexicographic identification [R] -> [r]: position i maps to the i-th
/// multi-index in row-major order.
Rank1Permutation lexicographic_permutation(const MultiRank& ranks);

/// Regroups the modes of `t` into an order-s tensor; groups[j] lists the
/// modes merged into axis j, first listed slowest. Pure index arithmetic on
/// the row-major layout.
DenseTensor flatten(const DenseTensor& t, const std::vector<std::vector<Index>>& groups);

/// Largest j such that every j-subset of `vectors` is linearly independent.
/// Numerical rank of each subset uses the threshold
/// max_dim * machine-epsilon * largest-singular-value.
Index kruskal_rank(const std::vector<std::vector<double>>& vectors);

/// Frobenius-relative difference ||t - approx||_F / ||t||_F.
double relative_error(const DenseTensor& t, const DenseTensor& approx);

}  // namespace hhd
