#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "simcore/bar_partition.hpp"
#include "simcore/partition.hpp"

namespace simcore {

/// Lattice path of 'R' and 'U' steps from the bottom-left to the top-right
/// corner of a rows x cols grid.
class MonotonicPath {
public:
    MonotonicPath() = default;
    MonotonicPath(int rows, int cols, std::string steps);

    /// Path whose up-left region holds prefixes[r] cells of row r (row 0 on
    /// top). Prefixes must be nonincreasing from top to bottom.
    static MonotonicPath from_row_prefixes(int cols, const std::vector<int>& prefixes);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const std::string& steps() const noexcept { return steps_; }

    /// Number of cells of each row (top first) lying up-left of the path.
    std::vector<int> row_prefixes() const;

    bool operator==(const MonotonicPath&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::string steps_;
};

/// Integer grid whose positive entries form an up-left staircase; the border
/// is the monotonic path separating them from the negative entries.
class SignedGrid {
public:
    SignedGrid(int rows, int cols, std::vector<std::int64_t> values);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    /// Matrix coordinates, 1-based: row 1 on top, column 1 on the left.
    std::int64_t value(int i, int j) const;

    const MonotonicPath& border() const noexcept { return border_; }

    /// Entries between `path` and the border (signed).
    std::vector<std::int64_t> trapped(const MonotonicPath& path) const;

    /// Path whose trapped absolute values are exactly `values`. Throws
    /// std::invalid_argument when no such path exists.
    MonotonicPath path_trapping(const std::vector<std::int64_t>& values) const;

    std::string to_csv() const;

private:
    int rows_;
    int cols_;
    std::vector<std::int64_t> values_;
    MonotonicPath border_;
};

void for_each_path(int rows, int cols, const std::function<void(const MonotonicPath&)>& visit);
std::vector<MonotonicPath> enumerate_paths(int rows, int cols);

// Anderson's s x t lattice of first-column hook candidates (gcd(s,t) = 1).
SignedGrid anderson_grid(int s, int t);
Partition anderson_path_to_core(const MonotonicPath& path, int s, int t);
MonotonicPath anderson_core_to_path(const Partition& p, int s, int t);

/// Every path weakly above the border, i.e. every (s,t)-core.
void for_each_anderson_path(int s, int t, const std::function<void(const MonotonicPath&)>& visit);

// Diagonal-hooks lattice: floor(s/2) x floor(t/2), entry st - s(2j-1) - t(2i-1).
SignedGrid dh_grid(int s, int t);
Partition dh_path_to_selfconj(const MonotonicPath& path, int s, int t);
MonotonicPath dh_selfconj_to_path(const Partition& p, int s, int t);

// Yin-Yang lattice: (s-1)/2 x (t-1)/2 for odd coprime 1 < s < t.
SignedGrid yinyang_grid(int s, int t);
BarPartition yy_path_to_barcore(const MonotonicPath& path, int s, int t);
MonotonicPath yy_barcore_to_path(const BarPartition& b, int s, int t);

/// Self-conjugate (s,t)-cores to (s-bar,t-bar)-cores for odd coprime s,t:
/// the same path read in the diagonal-hooks and Yin-Yang lattices.
BarPartition gamma(const Partition& p, int s, int t);
Partition gamma_inverse(const BarPartition& b, int s, int t);

/// Odd s, t with g = gcd(s,t) > 1: zeta on the g-core, the first (g-1)/2
/// quotient components copied, gamma on the middle component.
BarPartition big_gamma(const Partition& p, int s, int t);
Partition big_gamma_inverse(const BarPartition& b, int s, int t);

}  // namespace simcore
