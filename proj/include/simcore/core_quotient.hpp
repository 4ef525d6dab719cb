#pragma once

#include <utility>
#include <vector>

#include "simcore/bar_partition.hpp"
#include "simcore/partition.hpp"

namespace simcore {

/// g-core and g-quotient of a partition. Quotient components are 0-indexed
/// by beta-set residue class (beta-sets of cardinality divisible by g).
struct StraightTower {
    int g = 2;
    Partition core;
    std::vector<Partition> quotient;
    int weight = 0;

    bool operator==(const StraightTower&) const = default;
};

/// g-bar-core and g-bar-quotient (g odd). `bar_component` is lambda_0,
/// `quotient[j-1]` is lambda_j for 1 <= j <= (g-1)/2.
struct BarTower {
    int g = 3;
    BarPartition core;
    BarPartition bar_component;
    std::vector<Partition> quotient;
    int weight = 0;

    bool operator==(const BarTower&) const = default;
};

StraightTower decompose(const Partition& p, int g);

/// Throws std::invalid_argument if the core is not a g-core or the quotient
/// does not have g components.
Partition reconstruct(const StraightTower& tower);

/// Number of hooks of length k*g in p, and of length k across the g-quotient.
std::pair<int, int> hook_bijection_check(const Partition& p, int g, int k);

bool is_st_core(const Partition& p, int s, int t);

/// (s,t)-core test through the gcd-quotient: every component must be an
/// (s/g, t/g)-core. Requires gcd(s,t) > 1.
bool is_st_core_via_quotient(const Partition& p, int s, int t);

/// Core self-conjugate and quotient[i] conjugate to quotient[g-1-i].
bool selfconjugate_tower_check(const StraightTower& tower);

BarTower bar_decompose(const BarPartition& b, int g);
BarPartition bar_reconstruct(const BarTower& tower);

/// Number of bars of length k*g in b, and of bars of length k in lambda_0
/// plus hooks of length k in the remaining components.
std::pair<int, int> bar_bijection_check(const BarPartition& b, int g, int k);

bool is_stbar_core(const BarPartition& b, int s, int t);

/// Quotient criterion: lambda_0 an (s'-bar, t'-bar)-core and the other
/// components (s',t')-cores, with g = gcd(s,t) > 1.
bool is_stbar_core_via_quotient(const BarPartition& b, int s, int t);

}  // namespace simcore
