#include "simcore/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace simcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

BetaSet::BetaSet(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
        throw std::invalid_argument("beta-set values must be distinct");
    }
    if (!values_.empty() && values_.back() < 0) {
        throw std::invalid_argument("beta-set values must be nonnegative");
    }
}

bool BetaSet::contains(int v) const noexcept {
    return std::binary_search(values_.begin(), values_.end(), v, std::greater<>());
}

std::vector<int> hook_length_multiset(const Partition& p) {
    const Partition c = conjugate(p);
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(p.size()));
    for (std::size_t i = 0; i < p.length(); ++i) {
        for (int j = 0; j < p[i]; ++j) {
            hooks.push_back(p[i] - j + c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
        }
    }
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

BetaSet first_column_hooks(const Partition& p) { return beta_set(p, p.length()); }

BetaSet beta_set(const Partition& p, std::size_t count) {
    if (count < p.length()) {
        throw std::invalid_argument("beta-set cardinality smaller than number of parts");
    }
    std::vector<int> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = p[i] + static_cast<int>(count - 1 - i);
    }
    return BetaSet(std::move(values));
}

Partition from_first_column_hooks(const BetaSet& b) {
    const auto& v = b.values();
    const std::size_t n = v.size();
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i) {
        parts[i] = v[i] - static_cast<int>(n - 1 - i);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) {
        return {};
    }
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int part : p) {
        for (int j = 0; j < part; ++j) {
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

std::vector<int> diagonal_hooks(const Partition& p) {
    const Partition c = conjugate(p);
    std::vector<int> out;
    for (std::size_t i = 0; i < p.length() && p[i] > static_cast<int>(i); ++i) {
        out.push_back(p[i] + c[i] - 2 * static_cast<int>(i) - 1);
    }
    return out;
}

Partition from_diagonal_hooks(std::span<const int> hooks) {
    std::vector<int> d(hooks.begin(), hooks.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    if (std::adjacent_find(d.begin(), d.end()) != d.end()) {
        throw std::invalid_argument("diagonal hooks must be distinct");
    }
    for (int h : d) {
        if (h <= 0 || h % 2 == 0) {
            throw std::invalid_argument("diagonal hooks must be odd and positive");
        }
    }
    // Frobenius coordinates (a | a) with a_i = (h_i - 1) / 2.
    const std::size_t k = d.size();
    std::vector<int> rows;
    for (std::size_t i = 0; i < k; ++i) {
        rows.push_back((d[i] - 1) / 2 + static_cast<int>(i) + 1);
    }
    for (std::size_t r = k;; ++r) {
        int len = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (rows[j] > static_cast<int>(r)) {
                ++len;  // column j has the same length as row j
            }
        }
        if (len == 0) {
            break;
        }
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

bool is_t_core(const Partition& p, int t) {
    if (t < 1) {
        throw std::invalid_argument("t must be positive");
    }
    // A partition has a hook of length divisible by t iff it has one of
    // length t, so the beta-set test suffices: no b with b - t free.
    const BetaSet b = first_column_hooks(p);
    for (int x : b) {
        if (x >= t && !b.contains(x - t)) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace simcore
