#include "simcore/encodings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcore {

namespace {

void require_odd(int t, int minimum) {
    if (t < minimum || t % 2 == 0) {
        throw std::invalid_argument("modulus must be odd and at least " + std::to_string(minimum));
    }
}

}  // namespace

CoreTuple::CoreTuple(int t, std::vector<int> entries) : t_(t), entries_(std::move(entries)) {
    if (t_ < 1) {
        throw std::invalid_argument("t must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(t_)) {
        throw std::invalid_argument("core tuple must have t entries");
    }
    if (std::accumulate(entries_.begin(), entries_.end(), 0L) != 0) {
        throw std::invalid_argument("core tuple entries must sum to zero");
    }
}

BarTuple::BarTuple(int t, std::vector<int> entries) : t_(t), entries_(std::move(entries)) {
    require_odd(t_, 3);
    if (entries_.size() != static_cast<std::size_t>((t_ - 1) / 2)) {
        throw std::invalid_argument("bar tuple must have (t-1)/2 entries");
    }
}

CoreTuple gks_encode(const Partition& p, int t) {
    if (!is_t_core(p, t)) {
        throw std::invalid_argument("gks_encode: " + to_string(p) + " is not a t-core");
    }
    const std::size_t n = (p.length() + static_cast<std::size_t>(t) - 1) / static_cast<std::size_t>(t) *
                          static_cast<std::size_t>(t);
    std::vector<int> counts(static_cast<std::size_t>(t), -static_cast<int>(n) / t);
    for (int x : beta_set(p, n)) {
        ++counts[static_cast<std::size_t>(x % t)];
    }
    return CoreTuple(t, std::move(counts));
}

Partition gks_decode(const CoreTuple& c) {
    const int t = c.t();
    const auto& a = c.entries();
    const int shift = std::max(0, -*std::min_element(a.begin(), a.end()));
    std::vector<int> beads;
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < shift + a[static_cast<std::size_t>(i)]; ++j) {
            beads.push_back(i + t * j);
        }
    }
    return from_first_column_hooks(BetaSet(std::move(beads)));
}

bool is_selfconjugate_tuple(const CoreTuple& c) {
    require_odd(c.t(), 1);
    const auto& a = c.entries();
    const std::size_t t = a.size();
    for (std::size_t i = 0; i < t; ++i) {
        if (a[i] != -a[t - 1 - i]) {
            return false;
        }
    }
    return true;
}

std::vector<int> diagonal_hooks_from_tuple(const CoreTuple& c) {
    require_odd(c.t(), 1);
    const int t = c.t();
    std::vector<int> out;
    for (int i = 0; i < t; ++i) {
        for (int l = 0; l < c[static_cast<std::size_t>(i)]; ++l) {
            out.push_back(2 * (i + l * t) + 1);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

BarTuple olsson_encode(const BarPartition& b, int t) {
    require_odd(t, 3);
    std::vector<int> entries;
    for (int i = 1; i <= (t - 1) / 2; ++i) {
        int low = 0;
        int high = 0;
        for (int x : b) {
            if (x % t == 0) {
                throw std::invalid_argument("olsson_encode: part divisible by t");
            }
            low += x % t == i;
            high += x % t == t - i;
        }
        if (low > 0 && high > 0) {
            throw std::invalid_argument("olsson_encode: residues i and t-i both present");
        }
        const int residue = low > 0 ? i : t - i;
        const int count = std::max(low, high);
        for (int l = 0; l < count; ++l) {
            if (!b.contains(residue + l * t)) {
                throw std::invalid_argument("olsson_encode: residue class is not an initial run");
            }
        }
        entries.push_back(low > 0 ? low : -high);
    }
    return BarTuple(t, std::move(entries));
}

BarPartition olsson_decode(const BarTuple& bt) {
    const int t = bt.t();
    std::vector<int> parts;
    for (int i = 1; i <= (t - 1) / 2; ++i) {
        const int c = bt.entries()[static_cast<std::size_t>(i - 1)];
        const int residue = c > 0 ? i : t - i;
        for (int l = 0; l < std::abs(c); ++l) {
            parts.push_back(residue + l * t);
        }
    }
    return BarPartition(std::move(parts));
}

BarPartition zeta(const Partition& p, int t) {
    require_odd(t, 3);
    if (!is_self_conjugate(p)) {
        throw std::invalid_argument("zeta: " + to_string(p) + " is not self-conjugate");
    }
    const CoreTuple a = gks_encode(p, t);
    std::vector<int> entries(a.entries().begin(), a.entries().begin() + (t - 1) / 2);
    return olsson_decode(BarTuple(t, std::move(entries)));
}

Partition zeta_inverse(const BarPartition& b, int t) {
    require_odd(t, 3);
    const BarTuple bt = olsson_encode(b, t);
    std::vector<int> a(static_cast<std::size_t>(t), 0);
    for (std::size_t i = 0; i < bt.entries().size(); ++i) {
        a[i] = bt.entries()[i];
        a[static_cast<std::size_t>(t) - 1 - i] = -bt.entries()[i];
    }
    return gks_decode(CoreTuple(t, std::move(a)));
}

}  // namespace simcore
