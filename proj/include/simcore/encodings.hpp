#pragma once

#include <vector>

#include "simcore/bar_partition.hpp"
#include "simcore/partition.hpp"

namespace simcore {

/// Integer t-vector (a_0, ..., a_{t-1}) with zero sum labelling a t-core:
/// a_i is the bead count on runner i minus N/t for any beta-set of
/// cardinality N divisible by t.
class CoreTuple {
public:
    CoreTuple(int t, std::vector<int> entries);

    int t() const noexcept { return t_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int operator[](std::size_t i) const { return entries_.at(i); }

    bool operator==(const CoreTuple&) const = default;

private:
    int t_;
    std::vector<int> entries_;
};

/// Olsson's ((t-1)/2)-tuple labelling a t-bar-core, t odd.
class BarTuple {
public:
    BarTuple(int t, std::vector<int> entries);

    int t() const noexcept { return t_; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    bool operator==(const BarTuple&) const = default;

private:
    int t_;
    std::vector<int> entries_;
};

CoreTuple gks_encode(const Partition& p, int t);
Partition gks_decode(const CoreTuple& c);

/// (a_0, ..., a_{(t-3)/2}, 0, -a_{(t-3)/2}, ..., -a_0); t must be odd.
bool is_selfconjugate_tuple(const CoreTuple& c);

/// {2(i + l t) + 1 : a_i > 0, 0 <= l < a_i}, sorted decreasing.
std::vector<int> diagonal_hooks_from_tuple(const CoreTuple& c);

BarTuple olsson_encode(const BarPartition& b, int t);
BarPartition olsson_decode(const BarTuple& bt);

/// Self-conjugate t-cores to t-bar-cores (t odd): b'_{i+1} = a_i.
BarPartition zeta(const Partition& p, int t);
Partition zeta_inverse(const BarPartition& b, int t);

}  // namespace simcore
