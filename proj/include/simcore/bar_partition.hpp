#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "simcore/partition.hpp"

namespace simcore {

/// Partition into distinct parts, largest first.
class BarPartition {
public:
    BarPartition() = default;
    explicit BarPartition(std::vector<int> parts);
    BarPartition(std::initializer_list<int> parts) : BarPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    bool contains(int part) const noexcept;

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    Partition as_partition() const { return Partition(parts_); }

    bool operator==(const BarPartition&) const = default;
    auto operator<=>(const BarPartition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Bar lengths, sorted decreasing. Row i contributes lambda_i + lambda_j for
/// j > i together with {1..lambda_i} minus {lambda_i - lambda_j : j > i}.
std::vector<int> bar_length_multiset(const BarPartition& b);

/// t must be odd and positive.
bool is_tbar_core(const BarPartition& b, int t);

/// Visits every bar partition of n once, largest first part first.
void for_each_bar_partition(int n, const std::function<void(const BarPartition&)>& visit);
std::vector<BarPartition> enumerate_bar_partitions(int n);

std::string to_string(const BarPartition& b);

}  // namespace simcore
