#pragma once

#include <cstddef>
#include <vector>

#include "tcore/partition.hpp"

namespace tcore {

/// Beta-set (abacus) encoding of a partition: the first-column hook lengths
/// padded with k-1, ..., 1, 0 up to `bead_count` beads, strictly decreasing.
/// Moving a bead b to an empty position b - t removes a rim t-hook.
class BetaSet {
public:
    BetaSet(const Partition& lambda, std::size_t bead_count);

    /// Bead count rounded up to the next multiple of t; this fixes how runners
    /// are labelled for quotients.
    static BetaSet normalized(const Partition& lambda, int t);
    /// Beads given directly; they are sorted and must be distinct and nonnegative.
    static BetaSet from_beads(std::vector<int> beads);

    const std::vector<int>& beads() const noexcept { return beads_; }
    std::size_t bead_count() const noexcept { return beads_.size(); }
    Partition to_partition() const;

private:
    BetaSet() = default;
    std::vector<int> beads_;
};

/// Rows of t-cores. Row j holds t^j partitions; rows are kept up to the last
/// nonempty one, so an empty source partition has a single row {∅}.
class CoreTower {
public:
    CoreTower(int t, std::vector<std::vector<Partition>> rows);

    int modulus() const noexcept { return t_; }
    std::size_t height() const noexcept { return rows_.size() - 1; }
    const std::vector<std::vector<Partition>>& rows() const noexcept { return rows_; }
    /// Row j; rows above the height are all-∅ and are not stored, so j must be <= height().
    const std::vector<Partition>& row(std::size_t j) const { return rows_.at(j); }
    /// |β_j|: total size of row j, zero beyond the height.
    int row_size(std::size_t j) const noexcept;
    /// Σ_j |β_j|.
    int total_size() const noexcept;
    /// Σ_j t^j |β_j|, which equals the source partition's size.
    long long weighted_size() const noexcept;

private:
    int t_;
    std::vector<std::vector<Partition>> rows_;
};

Partition t_core(const Partition& lambda, int t);

/// Component r is read from abacus runner r of the beta-set normalized to a
/// bead count divisible by t.
std::vector<Partition> t_quotient(const Partition& lambda, int t);

/// The unique partition with the given t-core and t-quotient (same runner convention
/// as t_quotient). Throws std::invalid_argument if `core` is not a t-core or the
/// quotient does not have exactly t components.
Partition reconstruct(const Partition& core, const std::vector<Partition>& quotient, int t);

/// Row j of the pre-tower: row 0 is (λ), row j is the concatenated t-quotients of row j-1.
/// Has t^j entries; throws std::length_error if t^j would exceed `max_entries`.
std::vector<Partition> pre_tower_row(const Partition& lambda, int t, int j,
                                     std::size_t max_entries = std::size_t{1} << 24);

CoreTower core_tower(const Partition& lambda, int t);

/// |β_j(t; λ)|.
int row_size(const Partition& lambda, int t, int j);

/// d_t(λ) = (|λ| - Σ_j |β_j|) / (t - 1).
int defect(const Partition& lambda, int t);

/// True iff pre-tower row j+1 is entirely empty.
bool is_generalized_core(const Partition& lambda, int j, int t);

/// No hook length divisible by t.
bool is_t_core(const Partition& lambda, int t);

}  // namespace tcore
