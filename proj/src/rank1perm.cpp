#include "hhd/rank1perm.hpp"

#include "hhd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hhd {

namespace {

constexpr Index npos = std::numeric_limits<Index>::max();

std::vector<Index> argsort_desc_magnitude(const std::vector<double>& v) {
    std::vector<Index> order(v.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index x, Index y) { return std::abs(v[x]) > std::abs(v[y]); });
    return order;
}

std::vector<double> magnitudes_of(const std::vector<double>& v) {
    std::vector<double> mag(v.size());
    for (Index i = 0; i < v.size(); ++i) mag[i] = std::abs(v[i]);
    return mag;
}

void check_sorted_input(const std::vector<double>& a_sorted) {
    require(!a_sorted.empty(), ErrorCode::EmptyInput, "empty vector");
    for (Index i = 0; i + 1 < a_sorted.size(); ++i)
        require(std::abs(a_sorted[i]) >= std::abs(a_sorted[i + 1]), ErrorCode::UnsortedInput,
                "input must be sorted by decreasing magnitude");
    require(a_sorted[0] != 0.0, ErrorCode::ZeroLeadingEntry, "leading entry is zero");
}

// Scans all pairs 1 <= i < j < R and reports the first position k outside
// {0,i,j} whose value matches a_i*a_j/a_0 within the tolerance. The window
// of magnitude-compatible positions moves monotonically as j grows, so the
// whole scan is quadratic with a small constant.
template <typename Sink>
void scan_pairs(const std::vector<double>& a, const std::vector<double>& mag, double tol,
                MatchMode mode, Sink&& sink) {
    const Index size = a.size();
    if (size < 3) return;
    const double min_mag = mag[size - 1];
    for (Index i = 1; i + 1 < size; ++i) {
        const double scale = a[i] / a[0];
        Index window = 0;
        for (Index j = i + 1; j < size; ++j) {
            const double target = scale * a[j];
            const double tmag = std::abs(target);
            const double tol_eff = (mode == MatchMode::Absolute) ? tol : tol * tmag;
            const double hi = tmag + tol_eff;
            if (hi < min_mag) break;  // targets only shrink from here on
            while (window < size && mag[window] > hi) ++window;
            const double lo = tmag - tol_eff;
            for (Index k = window; k < size && mag[k] >= lo; ++k) {
                if (k == 0 || k == i || k == j) continue;
                if (std::abs(a[k] - target) <= tol_eff) {
                    sink(i, j, k);
                    break;
                }
            }
        }
    }
}

// Single-pair variant of the scan predicate, used during partitioning.
bool pair_has_minor(const std::vector<double>& a, const std::vector<double>& mag, Index i,
                    Index j, double tol, MatchMode mode) {
    const double target = a[i] / a[0] * a[j];
    const double tmag = std::abs(target);
    const double tol_eff = (mode == MatchMode::Absolute) ? tol : tol * tmag;
    const double hi = tmag + tol_eff;
    const double lo = tmag - tol_eff;
    auto begin = std::partition_point(mag.begin(), mag.end(),
                                      [hi](double m) { return m > hi; });
    for (Index k = static_cast<Index>(begin - mag.begin()); k < a.size() && mag[k] >= lo; ++k) {
        if (k == 0 || k == i || k == j) continue;
        if (std::abs(a[k] - target) <= tol_eff) return true;
    }
    return false;
}

template <typename HasMinor>
CrossPartition partition_cross_impl(const std::vector<Index>& cross, const MultiRank& ranks,
                                    HasMinor&& has_minor) {
    const Index m = ranks.factor_count();
    Index expected = 0;
    for (Index rk : ranks.ranks) expected += rk - 1;
    require(cross.size() == expected, ErrorCode::NotAdmissible,
            "cross has " + std::to_string(cross.size()) + " positions but the ranks require " +
                std::to_string(expected));

    CrossPartition partition;
    partition.directions.assign(m, {});
    std::vector<bool> assigned(m, false);
    std::vector<Index> remaining = cross;

    for (Index step = 0; step < m; ++step) {
        require(!remaining.empty(), ErrorCode::NotAdmissible, "ran out of cross positions");
        const Index pivot = remaining.front();
        std::vector<Index> group{pivot};
        for (Index pos = 1; pos < remaining.size(); ++pos) {
            const Index j = remaining[pos];
            if (!has_minor(pivot, j)) group.push_back(j);
        }
        // group holds the pivot plus its minor-free companions; it must fill
        // one direction of size r_l - 1.
        Index direction = npos;
        for (Index l = 0; l < m; ++l) {
            if (!assigned[l] && ranks.ranks[l] == group.size() + 1) {
                direction = l;
                break;
            }
        }
        require(direction != npos, ErrorCode::NotAdmissible,
                "no unassigned rank matches a direction of size " + std::to_string(group.size()));
        assigned[direction] = true;
        partition.directions[direction] = group;
        std::vector<Index> rest;
        rest.reserve(remaining.size() - group.size());
        for (Index v : remaining)
            if (std::find(group.begin(), group.end(), v) == group.end()) rest.push_back(v);
        remaining = std::move(rest);
    }
    require(remaining.empty(), ErrorCode::NotAdmissible, "leftover cross positions");
    return partition;
}

}  // namespace

bool MinorSet::has_pair(Index i, Index j) const {
    for (const auto& t : triples)
        if ((t[0] == i && t[1] == j) || (t[0] == j && t[1] == i)) return true;
    return false;
}

std::vector<bool> MinorSet::third_component_marks(Index size) const {
    std::vector<bool> marks(size, false);
    for (const auto& t : triples) marks.at(t[2]) = true;
    return marks;
}

MinorSet find_vanishing_minors(const std::vector<double>& a_sorted, double tol, MatchMode mode) {
    check_sorted_input(a_sorted);
    const std::vector<double> mag = magnitudes_of(a_sorted);
    MinorSet minors;
    scan_pairs(a_sorted, mag, tol, mode, [&](Index i, Index j, Index k) {
        minors.triples.push_back({i, j, k});
        minors.triples.push_back({j, i, k});
    });
    return minors;
}

std::vector<Index> extract_cross(const MinorSet& minors, Index size) {
    const std::vector<bool> marks = minors.third_component_marks(size);
    std::vector<Index> cross;
    for (Index k = 1; k < size; ++k)
        if (!marks[k]) cross.push_back(k);
    return cross;
}

CrossPartition partition_cross(const std::vector<Index>& cross, const MinorSet& minors,
                               const MultiRank& ranks) {
    return partition_cross_impl(cross, ranks,
                                [&](Index i, Index j) { return minors.has_pair(i, j); });
}

DenseTensor reconstruct_rank1(const std::vector<double>& a_sorted,
                              const CrossPartition& partition, const MultiRank& ranks) {
    require(!a_sorted.empty() && a_sorted[0] != 0.0, ErrorCode::ZeroLeadingEntry,
            "leading entry is zero");
    const Index m = ranks.factor_count();
    require(partition.directions.size() == m, ErrorCode::InvalidArgument,
            "partition does not match ranks");
    std::vector<std::vector<double>> factors(m);
    for (Index l = 0; l < m; ++l) {
        require(partition.directions[l].size() + 1 == ranks.ranks[l], ErrorCode::InvalidArgument,
                "direction size does not match rank");
        factors[l].resize(ranks.ranks[l]);
        factors[l][0] = 1.0;
        for (Index p = 0; p < partition.directions[l].size(); ++p)
            factors[l][p + 1] = a_sorted[partition.directions[l][p]] / a_sorted[0];
    }

    const Shape grid = ranks.as_shape();
    DenseTensor out(grid);
    MultiIndex idx(m, 0);
    Index linear = 0;
    do {
        double v = a_sorted[0];
        for (Index l = 0; l < m; ++l) v *= factors[l][idx[l]];
        out[linear++] = v;
    } while (next_multi_index(idx, grid));
    return out;
}

Rank1Permutation rank1_permutation(const std::vector<double>& a, const MultiRank& ranks,
                                   const Rank1PermConfig& cfg) {
    const Index big_rank = ranks.big_rank();
    require(a.size() == big_rank, ErrorCode::InvalidArgument,
            "vector length does not equal the product of the ranks");

    const Shape grid = ranks.as_shape();
    if (big_rank == 1)
        return Rank1Permutation(ranks, {MultiIndex(ranks.factor_count(), 0)});

    const std::vector<Index> order = argsort_desc_magnitude(a);
    std::vector<double> sorted(big_rank);
    for (Index t = 0; t < big_rank; ++t) sorted[t] = a[order[t]];
    check_sorted_input(sorted);

    const std::vector<double> mag = magnitudes_of(sorted);
    for (Index t = 0; t + 1 < big_rank; ++t) {
        const double tie_tol = (cfg.mode == MatchMode::Absolute) ? cfg.tol : cfg.tol * mag[t];
        require(mag[t] - mag[t + 1] > tie_tol, ErrorCode::AmbiguousMagnitudes,
                "entries at sorted positions " + std::to_string(t) + " and " +
                    std::to_string(t + 1) + " coincide in magnitude within the tolerance");
    }

    // Memory-lean equivalent of find_vanishing_minors + extract_cross: only
    // the third components are needed to carve out the cross.
    std::vector<bool> marked(big_rank, false);
    scan_pairs(sorted, mag, cfg.tol, cfg.mode,
               [&](Index, Index, Index k) { marked[k] = true; });
    std::vector<Index> cross;
    for (Index k = 1; k < big_rank; ++k)
        if (!marked[k]) cross.push_back(k);

    const CrossPartition partition = partition_cross_impl(
        cross, ranks, [&](Index i, Index j) {
            return pair_has_minor(sorted, mag, i, j, cfg.tol, cfg.mode);
        });

    const DenseTensor reconstruction = reconstruct_rank1(sorted, partition, ranks);

    // The t-th largest entry of the reconstruction sits where the t-th
    // largest entry of the input must land.
    const std::vector<Index> recon_order = argsort_desc_magnitude(reconstruction.data());
    std::vector<MultiIndex> images(big_rank);
    for (Index t = 0; t < big_rank; ++t) images[order[t]] = grid.multi_index(recon_order[t]);

    Rank1Permutation perm(ranks, std::move(images));
    const DenseTensor arranged = perm.apply(a);
    require(is_rank1(arranged, cfg.tol_rank), ErrorCode::VerificationFailed,
            "rearranged vector fails the rank-1 flattening check");
    return perm;
}

bool is_rank1(const DenseTensor& t, double tol_rank) {
    require(t.frobenius_norm() > 0.0, ErrorCode::ZeroTensor, "rank-1 test on the zero tensor");
    const Shape& shape = t.shape();
    const Index m = shape.order();
    const Index total = shape.element_count();
    for (Index h = 0; h < m; ++h) {
        const Index rows = shape.dim(h);
        const Index cols = total / rows;
        if (rows < 2 || cols < 2) continue;
        Eigen::MatrixXd flat(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        std::vector<Index> weight(m, 0);
        Index stride = 1;
        for (Index k = m; k-- > 0;) {
            if (k == h) continue;
            weight[k] = stride;
            stride *= shape.dim(k);
        }
        MultiIndex idx(m, 0);
        Index linear = 0;
        do {
            Index col = 0;
            for (Index k = 0; k < m; ++k) col += idx[k] * weight[k];
            flat(static_cast<Eigen::Index>(idx[h]), static_cast<Eigen::Index>(col)) = t[linear++];
        } while (next_multi_index(idx, shape));
        const Eigen::VectorXd sv = linalg::singular_values(flat);
        if (sv(1) > tol_rank * sv(0)) return false;
    }
    return true;
}

namespace {

// All 2x2 minors of every h-flattening vanish (up to the threshold); this
// characterizes rank-1 arrays among nonzero ones.
bool flattening_minors_vanish(const std::vector<double>& vals, const Shape& grid,
                              double threshold, std::vector<double>& scratch) {
    const Index m = grid.order();
    const Index total = grid.element_count();
    for (Index h = 0; h < m; ++h) {
        const Index rows = grid.dim(h);
        const Index cols = total / rows;
        if (rows < 2 || cols < 2) continue;
        scratch.resize(total);
        std::vector<Index> weight(m, 0);
        Index stride = 1;
        for (Index k = m; k-- > 0;) {
            if (k == h) continue;
            weight[k] = stride;
            stride *= grid.dim(k);
        }
        MultiIndex idx(m, 0);
        Index linear = 0;
        do {
            Index col = 0;
            for (Index k = 0; k < m; ++k) col += idx[k] * weight[k];
            scratch[idx[h] * cols + col] = vals[linear++];
        } while (next_multi_index(idx, grid));
        for (Index p = 0; p + 1 < rows; ++p)
            for (Index q = p + 1; q < rows; ++q)
                for (Index s = 0; s + 1 < cols; ++s)
                    for (Index u = s + 1; u < cols; ++u) {
                        const double minor = scratch[p * cols + s] * scratch[q * cols + u] -
                                             scratch[p * cols + u] * scratch[q * cols + s];
                        if (std::abs(minor) > threshold) return false;
                    }
    }
    return true;
}

}  // namespace

std::vector<Rank1Permutation> brute_force_rank1_permutations(const std::vector<double>& a,
                                                             const MultiRank& ranks,
                                                             double minor_tol) {
    const Index big_rank = ranks.big_rank();
    require(big_rank <= 10, ErrorCode::TooLarge, "exhaustive search is limited to R <= 10");
    require(a.size() == big_rank, ErrorCode::InvalidArgument,
            "vector length does not equal the product of the ranks");

    const Shape grid = ranks.as_shape();
    double amax = 0.0;
    for (double v : a) amax = std::max(amax, std::abs(v));
    const double threshold = minor_tol * std::max(1.0, amax * amax);

    std::vector<Rank1Permutation> found;
    std::vector<Index> arrangement(big_rank);
    std::iota(arrangement.begin(), arrangement.end(), Index{0});
    std::vector<double> vals(big_rank);
    std::vector<double> scratch;
    do {
        bool nonzero = false;
        for (Index p = 0; p < big_rank; ++p) {
            vals[p] = a[arrangement[p]];
            nonzero = nonzero || vals[p] != 0.0;
        }
        if (!nonzero) continue;
        if (!flattening_minors_vanish(vals, grid, threshold, scratch)) continue;
        std::vector<MultiIndex> images(big_rank);
        for (Index p = 0; p < big_rank; ++p) images[arrangement[p]] = grid.multi_index(p);
        found.emplace_back(ranks, std::move(images));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return found;
}

bool rank1_preserver_equivalent(const Rank1Permutation& p, const Rank1Permutation& q) {
    std::vector<Index> p_sorted = p.ranks.ranks;
    std::vector<Index> q_sorted = q.ranks.ranks;
    std::sort(p_sorted.begin(), p_sorted.end());
    std::sort(q_sorted.begin(), q_sorted.end());
    require(p_sorted == q_sorted, ErrorCode::RankMismatch,
            "permutations have different rank multisets");
    require(p.size() == q.size(), ErrorCode::RankMismatch, "permutations have different sizes");

    const Index m = p.ranks.factor_count();
    const Shape p_grid = p.ranks.as_shape();

    // sigma = q o p^{-1} as a table over the p-grid
    std::vector<MultiIndex> sigma(p.size());
    for (Index i = 0; i < p.size(); ++i) sigma[p_grid.linear_index(p.images[i])] = q.images[i];

    // Search mode relabelings psi with r'_k = r_{psi(k)}; for each, check
    // that sigma(u)_k depends only on u_{psi(k)} through a per-mode bijection.
    std::vector<Index> psi(m);
    std::iota(psi.begin(), psi.end(), Index{0});
    std::sort(psi.begin(), psi.end());
    do {
        bool compatible = true;
        for (Index k = 0; k < m && compatible; ++k)
            compatible = q.ranks.ranks[k] == p.ranks.ranks[psi[k]];
        if (!compatible) continue;

        std::vector<std::vector<Index>> table(m);
        for (Index k = 0; k < m; ++k) table[k].assign(q.ranks.ranks[k], npos);
        bool consistent = true;
        MultiIndex u(m, 0);
        Index linear = 0;
        do {
            const MultiIndex& w = sigma[linear++];
            for (Index k = 0; k < m; ++k) {
                Index& slot = table[k][u[psi[k]]];
                if (slot == npos)
                    slot = w[k];
                else if (slot != w[k]) {
                    consistent = false;
                    break;
                }
            }
        } while (consistent && next_multi_index(u, p_grid));

        if (consistent) {
            // every per-mode table must be a bijection
            bool bijective = true;
            for (Index k = 0; k < m && bijective; ++k) {
                std::vector<bool> seen(q.ranks.ranks[k], false);
                for (Index v : table[k]) {
                    if (v == npos || seen[v]) {
                        bijective = false;
                        break;
                    }
                    seen[v] = true;
                }
            }
            if (bijective) return true;
        }
    } while (std::next_permutation(psi.begin(), psi.end()));
    return false;
}

}  // namespace hhd
