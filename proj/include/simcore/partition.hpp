#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace simcore {

/// Integer partition stored largest part first. Construction canonicalizes
/// (sorts, drops zero parts), so every value is a valid partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-indexed), or 0 past the last part.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Set of distinct nonnegative integers, kept strictly decreasing.
class BetaSet {
public:
    BetaSet() = default;
    explicit BetaSet(std::vector<int> values);
    BetaSet(std::initializer_list<int> values) : BetaSet(std::vector<int>(values)) {}

    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool contains(int v) const noexcept;

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool operator==(const BetaSet&) const = default;

private:
    std::vector<int> values_;
};

/// Multiset of hook lengths, sorted decreasing.
std::vector<int> hook_length_multiset(const Partition& p);

/// First-column hook lengths lambda_i + k - i for a partition with k parts.
BetaSet first_column_hooks(const Partition& p);

/// Beta-set with exactly `count` entries (count >= number of parts).
BetaSet beta_set(const Partition& p, std::size_t count);

/// Inverse of first_column_hooks. Padded beta-sets containing a leading run
/// 0,1,...,m-1 decode to the same partition as the unpadded set.
Partition from_first_column_hooks(const BetaSet& b);

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// Diagonal hook lengths h_11 > h_22 > ...
std::vector<int> diagonal_hooks(const Partition& p);

/// Unique self-conjugate partition with the given diagonal hooks.
/// Entries must be distinct odd positive integers (any order).
Partition from_diagonal_hooks(std::span<const int> hooks);

bool is_t_core(const Partition& p, int t);

std::string to_string(const Partition& p);

}  // namespace simcore
