#include "simcore/core_quotient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcore {

namespace {

void require_modulus(int g) {
    if (g < 2) {
        throw std::invalid_argument("quotient modulus must be at least 2");
    }
}

void require_odd_modulus(int g) {
    if (g < 3 || g % 2 == 0) {
        throw std::invalid_argument("bar quotient modulus must be odd and at least 3");
    }
}

std::size_t round_up(std::size_t n, int g) {
    const auto m = static_cast<std::size_t>(g);
    return (n + m - 1) / m * m;
}

int count_equal(const std::vector<int>& values, int x) {
    return static_cast<int>(std::count(values.begin(), values.end(), x));
}

// Runner counts of a beta-set of cardinality N (N divisible by g).
std::vector<int> runner_counts(const BetaSet& beta, int g) {
    std::vector<int> counts(static_cast<std::size_t>(g), 0);
    for (int x : beta) {
        ++counts[static_cast<std::size_t>(x % g)];
    }
    return counts;
}

// Maya diagram with runner j beads on the nonnegative side and runner g-j
// beads read as holes at -1-k on the negative side.
struct Maya {
    Partition shape;
    int charge = 0;
};

Maya maya_from_runners(const std::vector<int>& positive, const std::vector<int>& negative) {
    const int charge = static_cast<int>(positive.size()) - static_cast<int>(negative.size());
    std::vector<int> beads(positive);
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const int depth = negative.empty() ? 0 : *std::max_element(negative.begin(), negative.end()) + 1;
    for (int p = -1; p >= -depth; --p) {
        if (std::find(negative.begin(), negative.end(), -1 - p) == negative.end()) {
            beads.push_back(p);
        }
    }
    std::vector<int> parts;
    for (std::size_t k = 0; k < beads.size(); ++k) {
        parts.push_back(beads[k] - (charge - 1 - static_cast<int>(k)));
    }
    return {Partition(std::move(parts)), charge};
}

void maya_to_runners(const Partition& shape, int charge, std::vector<int>& positive,
                     std::vector<int>& negative) {
    const int len = static_cast<int>(shape.length());
    std::vector<int> beads;
    for (int k = 0; k < len; ++k) {
        beads.push_back(shape[static_cast<std::size_t>(k)] + charge - 1 - k);
    }
    // Every position below charge - len is occupied.
    const int floor = charge - len;
    for (int p = 0; p < floor; ++p) {
        beads.push_back(p);
    }
    for (int p : beads) {
        if (p >= 0) {
            positive.push_back(p);
        }
    }
    for (int p = std::min(floor, 0); p < 0; ++p) {
        if (std::find(beads.begin(), beads.end(), p) == beads.end()) {
            negative.push_back(-1 - p);
        }
    }
}

}  // namespace

StraightTower decompose(const Partition& p, int g) {
    require_modulus(g);
    const BetaSet beta = beta_set(p, round_up(p.length(), g));
    StraightTower tower;
    tower.g = g;
    std::vector<int> core_beads;
    for (int i = 0; i < g; ++i) {
        std::vector<int> runner;
        for (int x : beta) {
            if (x % g == i) {
                runner.push_back((x - i) / g);
            }
        }
        for (std::size_t k = 0; k < runner.size(); ++k) {
            core_beads.push_back(i + g * static_cast<int>(k));
        }
        tower.quotient.push_back(from_first_column_hooks(BetaSet(std::move(runner))));
        tower.weight += tower.quotient.back().size();
    }
    tower.core = from_first_column_hooks(BetaSet(std::move(core_beads)));
    return tower;
}

Partition reconstruct(const StraightTower& tower) {
    const int g = tower.g;
    require_modulus(g);
    if (tower.quotient.size() != static_cast<std::size_t>(g)) {
        throw std::invalid_argument("quotient must have g components");
    }
    if (!is_t_core(tower.core, g)) {
        throw std::invalid_argument("core is not a g-core");
    }
    std::vector<int> counts = runner_counts(beta_set(tower.core, round_up(tower.core.length(), g)), g);
    int extra = 0;
    for (int i = 0; i < g; ++i) {
        const auto& q = tower.quotient[static_cast<std::size_t>(i)];
        extra = std::max(extra, static_cast<int>(q.length()) - counts[static_cast<std::size_t>(i)]);
    }
    std::vector<int> beads;
    for (int i = 0; i < g; ++i) {
        const int m = counts[static_cast<std::size_t>(i)] + extra;
        const auto& q = tower.quotient[static_cast<std::size_t>(i)];
        for (int k = 0; k < m; ++k) {
            beads.push_back(i + g * (q[static_cast<std::size_t>(k)] + m - 1 - k));
        }
    }
    return from_first_column_hooks(BetaSet(std::move(beads)));
}

std::pair<int, int> hook_bijection_check(const Partition& p, int g, int k) {
    require_modulus(g);
    if (k < 1) {
        throw std::invalid_argument("k must be positive");
    }
    const int in_p = count_equal(hook_length_multiset(p), k * g);
    int in_quotient = 0;
    for (const auto& q : decompose(p, g).quotient) {
        in_quotient += count_equal(hook_length_multiset(q), k);
    }
    return {in_p, in_quotient};
}

bool is_st_core(const Partition& p, int s, int t) {
    if (s <= 1 || t <= 1) {
        throw std::invalid_argument("s and t must exceed 1");
    }
    return is_t_core(p, s) && is_t_core(p, t);
}

bool is_st_core_via_quotient(const Partition& p, int s, int t) {
    if (s <= 1 || t <= 1) {
        throw std::invalid_argument("s and t must exceed 1");
    }
    const int g = std::gcd(s, t);
    if (g == 1) {
        throw std::invalid_argument("quotient criterion needs gcd(s,t) > 1");
    }
    const auto tower = decompose(p, g);
    return std::all_of(tower.quotient.begin(), tower.quotient.end(), [&](const Partition& q) {
        return is_t_core(q, s / g) && is_t_core(q, t / g);
    });
}

bool selfconjugate_tower_check(const StraightTower& tower) {
    if (!is_self_conjugate(tower.core)) {
        return false;
    }
    const std::size_t g = tower.quotient.size();
    for (std::size_t i = 0; i < g; ++i) {
        if (conjugate(tower.quotient[i]) != tower.quotient[g - 1 - i]) {
            return false;
        }
    }
    return true;
}

BarTower bar_decompose(const BarPartition& b, int g) {
    require_odd_modulus(g);
    BarTower tower;
    tower.g = g;
    std::vector<int> zero_runner;
    for (int x : b) {
        if (x % g == 0) {
            zero_runner.push_back(x / g);
        }
    }
    tower.bar_component = BarPartition(std::move(zero_runner));
    tower.weight = tower.bar_component.size();
    std::vector<int> core_parts;
    for (int j = 1; j <= (g - 1) / 2; ++j) {
        std::vector<int> positive;
        std::vector<int> negative;
        for (int x : b) {
            if (x % g == j) {
                positive.push_back((x - j) / g);
            } else if (x % g == g - j) {
                negative.push_back((x - (g - j)) / g);
            }
        }
        Maya maya = maya_from_runners(positive, negative);
        const int residue = maya.charge > 0 ? j : g - j;
        for (int l = 0; l < std::abs(maya.charge); ++l) {
            core_parts.push_back(residue + g * l);
        }
        tower.weight += maya.shape.size();
        tower.quotient.push_back(std::move(maya.shape));
    }
    tower.core = BarPartition(std::move(core_parts));
    return tower;
}

BarPartition bar_reconstruct(const BarTower& tower) {
    const int g = tower.g;
    require_odd_modulus(g);
    if (tower.quotient.size() != static_cast<std::size_t>((g - 1) / 2)) {
        throw std::invalid_argument("bar quotient must have (g-1)/2 partition components");
    }
    if (!is_tbar_core(tower.core, g)) {
        throw std::invalid_argument("core is not a g-bar-core");
    }
    std::vector<int> parts;
    for (int x : tower.bar_component) {
        parts.push_back(g * x);
    }
    for (int j = 1; j <= (g - 1) / 2; ++j) {
        int charge = 0;
        for (int x : tower.core) {
            if (x % g == j) {
                ++charge;
            } else if (x % g == g - j) {
                --charge;
            }
        }
        std::vector<int> positive;
        std::vector<int> negative;
        maya_to_runners(tower.quotient[static_cast<std::size_t>(j - 1)], charge, positive, negative);
        for (int p : positive) {
            parts.push_back(j + g * p);
        }
        for (int p : negative) {
            parts.push_back(g - j + g * p);
        }
    }
    return BarPartition(std::move(parts));
}

std::pair<int, int> bar_bijection_check(const BarPartition& b, int g, int k) {
    require_odd_modulus(g);
    if (k < 1) {
        throw std::invalid_argument("k must be positive");
    }
    const int in_b = count_equal(bar_length_multiset(b), k * g);
    const auto tower = bar_decompose(b, g);
    int in_quotient = count_equal(bar_length_multiset(tower.bar_component), k);
    for (const auto& q : tower.quotient) {
        in_quotient += count_equal(hook_length_multiset(q), k);
    }
    return {in_b, in_quotient};
}

bool is_stbar_core(const BarPartition& b, int s, int t) {
    if (s <= 1 || t <= 1 || s % 2 == 0 || t % 2 == 0) {
        throw std::invalid_argument("s and t must be odd and exceed 1");
    }
    return is_tbar_core(b, s) && is_tbar_core(b, t);
}

bool is_stbar_core_via_quotient(const BarPartition& b, int s, int t) {
    if (s <= 1 || t <= 1 || s % 2 == 0 || t % 2 == 0) {
        throw std::invalid_argument("s and t must be odd and exceed 1");
    }
    const int g = std::gcd(s, t);
    if (g == 1) {
        throw std::invalid_argument("quotient criterion needs gcd(s,t) > 1");
    }
    const auto tower = bar_decompose(b, g);
    if (!is_tbar_core(tower.bar_component, s / g) || !is_tbar_core(tower.bar_component, t / g)) {
        return false;
    }
    return std::all_of(tower.quotient.begin(), tower.quotient.end(), [&](const Partition& q) {
        return is_t_core(q, s / g) && is_t_core(q, t / g);
    });
}

}  // namespace simcore
