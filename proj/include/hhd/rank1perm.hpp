#pragma once

#include "hhd/decomposition.hpp"
#include "hhd/dense_tensor.hpp"

#include <array>
#include <vector>

namespace hhd {

/// How a candidate product a_i*a_j/a_1 is matched against entries of a.
enum class MatchMode {
    Absolute,  ///< |a_k - t| <= tol
    Relative,  ///< |a_k - t| <= tol * |t|
};

struct Rank1PermConfig {
    double tol = 1e-12;
    MatchMode mode = MatchMode::Absolute;
    /// A flattening counts as rank-1 when its second singular value is at
    /// most tol_rank times the first.
    double tol_rank = 1e-8;
};

/// Vanishing 2x2 top-left-corner minors of a magnitude-sorted vector,
/// stored symmetrically: (i,j,k) is present iff (j,i,k) is. Indices are
/// 0-based positions into the sorted vector; position 0 is the anchor.
struct MinorSet {
    std::vector<std::array<Index, 3>> triples;

    bool has_pair(Index i, Index j) const;
    /// marks[k] is true iff k occurs as the third component of a triple.
    std::vector<bool> third_component_marks(Index size) const;
};

/// Partition of the 1-cross into the m directions; direction h lists the
/// r_h - 1 sorted positions feeding mode h (the anchor position 0 is shared
/// by all directions and not stored).
struct CrossPartition {
    std::vector<std::vector<Index>> directions;
};

/// Scans all pairs 1 <= i < j < R for entries a_k matching a_i*a_j/a_0
/// within the tolerance; records (i,j,k) and (j,i,k) for the first matching
/// k outside {0,i,j}. Input must be sorted by decreasing magnitude with a
/// nonzero leading entry.
MinorSet find_vanishing_minors(const std::vector<double>& a_sorted, double tol,
                               MatchMode mode = MatchMode::Absolute);

/// Positions {1,...,R-1} that never occur as the third component of a
/// vanishing minor; these are exactly the candidates for the 1-cross.
std::vector<Index> extract_cross(const MinorSet& minors, Index size);

/// Greedy direction assignment: repeatedly take the first remaining cross
/// position i, group it with the remaining positions that share no vanishing
/// minor with i, and match the group against the first unassigned rank.
CrossPartition partition_cross(const std::vector<Index>& cross, const MinorSet& minors,
                               const MultiRank& ranks);

/// Interpolatory reconstruction: direction h yields the factor
/// (1, a[h_1]/a_0, ..., a[h_{r_h-1}]/a_0), and the tensor is a_0 times the
/// outer product of the factors.
DenseTensor reconstruct_rank1(const std::vector<double>& a_sorted,
                              const CrossPartition& partition, const MultiRank& ranks);

/// Computes a maximal rank-1 permutation of a generic admissible vector:
/// sorts by decreasing magnitude, runs the minor/cross/partition pipeline,
/// reconstructs the rank-1 arrangement, and reads the permutation off a
/// magnitude sort of the reconstruction. The returned permutation rho
/// satisfies: rho.apply(a) is numerically rank-1 (verified at tol_rank).
Rank1Permutation rank1_permutation(const std::vector<double>& a, const MultiRank& ranks,
                                   const Rank1PermConfig& cfg = {});

/// True iff every h-flattening of t has numerical rank 1 (second singular
/// value at most tol_rank times the first).
bool is_rank1(const DenseTensor& t, double tol_rank);

/// Exhaustive oracle over all R! arrangements; feasible for R <= 10 only.
/// Rank-1 membership is decided by the vanishing of every 2x2 minor of
/// every h-flattening, with an absolute tolerance of minor_tol scaled by
/// the squared magnitude of the largest entry.
std::vector<Rank1Permutation> brute_force_rank1_permutations(const std::vector<double>& a,
                                                             const MultiRank& ranks,
                                                             double minor_tol = 1e-10);

/// True iff q o p^{-1} factors as a tensor product of per-mode permutations
/// composed with a rank-preserving mode relabeling.
bool rank1_preserver_equivalent(const Rank1Permutation& p, const Rank1Permutation& q);

}  // namespace hhd
