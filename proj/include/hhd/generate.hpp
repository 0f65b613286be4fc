#pragma once

#include "hhd/decomposition.hpp"
#include "hhd/rng.hpp"

namespace hhd {

/// Rank-1 tensor with i.i.d. standard normal factor entries.
Rank1Tensor sample_rank1(const Shape& shape, Rng& rng);

/// CPD whose factor-matrix entries are i.i.d. standard normal.
Cpd sample_cpd(const Shape& shape, Index rank, Rng& rng);

/// HHD built from independently sampled factor CPDs. Draw order is fixed
/// (factor, term, mode, entry) so a seed pins the instance exactly.
OrderedHhd sample_hhd(const Shape& shape, const MultiRank& ranks, Rng& rng);

}  // namespace hhd
