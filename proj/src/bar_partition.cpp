#include "simcore/bar_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcore {

BarPartition::BarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x <= 0) {
            throw std::invalid_argument("bar partition parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end()) {
        throw std::invalid_argument("bar partition parts must be distinct");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool BarPartition::contains(int part) const noexcept {
    return std::binary_search(parts_.begin(), parts_.end(), part, std::greater<>());
}

std::vector<int> bar_length_multiset(const BarPartition& b) {
    std::vector<int> bars;
    bars.reserve(static_cast<std::size_t>(b.size()));
    const auto& p = b.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<char> removed(static_cast<std::size_t>(p[i]) + 1, 0);
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            bars.push_back(p[i] + p[j]);
            removed[static_cast<std::size_t>(p[i] - p[j])] = 1;
        }
        for (int k = 1; k <= p[i]; ++k) {
            if (!removed[static_cast<std::size_t>(k)]) {
                bars.push_back(k);
            }
        }
    }
    std::sort(bars.begin(), bars.end(), std::greater<>());
    return bars;
}

bool is_tbar_core(const BarPartition& b, int t) {
    if (t < 1 || t % 2 == 0) {
        throw std::invalid_argument("bar-core modulus must be odd and positive");
    }
    const auto bars = bar_length_multiset(b);
    return std::find(bars.begin(), bars.end(), t) == bars.end();
}

namespace {

void bar_rec(int remaining, int max_part, std::vector<int>& acc,
             const std::function<void(const BarPartition&)>& visit) {
    if (remaining == 0) {
        visit(BarPartition(acc));
        return;
    }
    for (int f = std::min(remaining, max_part); f >= 1; --f) {
        // The remaining parts are distinct and below f.
        if (f * (f + 1) / 2 < remaining) {
            break;
        }
        acc.push_back(f);
        bar_rec(remaining - f, f - 1, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

void for_each_bar_partition(int n, const std::function<void(const BarPartition&)>& visit) {
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    std::vector<int> acc;
    bar_rec(n, n, acc, visit);
}

std::vector<BarPartition> enumerate_bar_partitions(int n) {
    std::vector<BarPartition> out;
    for_each_bar_partition(n, [&](const BarPartition& b) { out.push_back(b); });
    return out;
}

std::string to_string(const BarPartition& b) { return to_string(b.as_partition()); }

}  // namespace simcore
