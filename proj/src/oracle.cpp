#include "simcore/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace simcore::oracle {

namespace {

void require_n(int n) {
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
}

void require_positive(int t, const char* what) {
    if (t < 1) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

void require_odd(int t, const char* what) {
    if (t < 1 || t % 2 == 0) {
        throw std::invalid_argument(std::string(what) + " must be odd and positive");
    }
}

// Returns false once the visitor asks to stop.
bool grow(int remaining, int largest, bool strict, Parts& parts, const std::function<bool(const Parts&)>& visit) {
    if (remaining == 0) {
        return visit(parts);
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
        parts.push_back(p);
        const bool go_on = grow(remaining - p, strict ? p - 1 : p, strict, parts, visit);
        parts.pop_back();
        if (!go_on) return false;
    }
    return true;
}

void walk(int n, bool strict, const std::function<bool(const Parts&)>& visit) {
    require_n(n);
    Parts parts;
    grow(n, n, strict, parts, visit);
}

std::vector<int> column_heights(const Parts& parts) {
    std::vector<int> heights(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
    for (int row : parts) {
        for (int j = 0; j < row; ++j) {
            ++heights[static_cast<std::size_t>(j)];
        }
    }
    return heights;
}

// Rows of the shift-symmetric diagram of a strict partition.
Parts shift_symmetric_rows(const Parts& strict_parts) {
    const int k = static_cast<int>(strict_parts.size());
    Parts rows;
    for (int i = 1; i <= k; ++i) {
        rows.push_back(strict_parts[static_cast<std::size_t>(i - 1)] + i);
    }
    for (int r = k + 1;; ++r) {
        int len = 0;
        for (int j = 1; j <= k; ++j) {
            len += strict_parts[static_cast<std::size_t>(j - 1)] - 1 + j >= r;
        }
        if (len == 0) break;
        rows.push_back(len);
    }
    return rows;
}

CountTable make_table(std::string quantity, std::vector<std::pair<std::string, int>> parameters, int N,
                      const std::function<Count(int)>& count) {
    require_n(N);
    CountTable table{std::move(quantity), std::move(parameters), {}};
    for (int n = 0; n <= N; ++n) {
        table.counts.push_back(count(n));
    }
    return table;
}

std::vector<Count> convolve(const std::vector<Count>& a, const std::vector<Count>& b) {
    std::vector<Count> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Count> power(const std::vector<Count>& base, int e) {
    std::vector<Count> out(base.size(), 0);
    out[0] = 1;
    for (int k = 0; k < e; ++k) {
        out = convolve(out, base);
    }
    return out;
}

std::vector<Count> base_counts(int W, const std::function<std::uint64_t(int)>& count) {
    std::vector<Count> out;
    for (int m = 0; m <= W; ++m) {
        out.emplace_back(count(m));
    }
    return out;
}

template <typename Child>
std::vector<Parts> grow_finite(const Child& children) {
    std::vector<Parts> found{Parts{}};
    std::vector<Parts> stack{Parts{}};
    while (!stack.empty()) {
        Parts mu = std::move(stack.back());
        stack.pop_back();
        for (Parts& child : children(mu)) {
            found.push_back(child);
            stack.push_back(std::move(child));
        }
    }
    std::sort(found.begin(), found.end(), [](const Parts& a, const Parts& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        return sa != sb ? sa < sb : a > b;
    });
    return found;
}

void require_coprime_pair(int s, int t) {
    if (s <= 1 || t <= 1) {
        throw std::invalid_argument("s and t must exceed 1");
    }
    if (std::gcd(s, t) != 1) {
        throw std::invalid_argument("s and t must be coprime");
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Parts&)>& visit) {
    walk(n, false, [&](const Parts& p) {
        visit(p);
        return true;
    });
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Parts& p) { out.emplace_back(p); });
    return out;
}

void for_each_strict_partition(int n, const std::function<void(const Parts&)>& visit) {
    walk(n, true, [&](const Parts& p) {
        visit(p);
        return true;
    });
}

std::optional<Parts> find_partition(int n, const Predicate& keep) {
    std::optional<Parts> hit;
    walk(n, false, [&](const Parts& p) {
        if (keep(p)) hit = p;
        return !hit;
    });
    return hit;
}

std::optional<Parts> find_strict_partition(int n, const Predicate& keep) {
    std::optional<Parts> hit;
    walk(n, true, [&](const Parts& p) {
        if (keep(p)) hit = p;
        return !hit;
    });
    return hit;
}

std::uint64_t count_filtered(int n, const Predicate& keep) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Parts& p) { count += keep(p); });
    return count;
}

std::uint64_t count_filtered_strict(int n, const Predicate& keep) {
    std::uint64_t count = 0;
    for_each_strict_partition(n, [&](const Parts& p) { count += keep(p); });
    return count;
}

std::vector<int> hook_lengths(const Parts& parts) {
    const auto heights = column_heights(parts);
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            const int arm = parts[i] - j - 1;
            const int leg = heights[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            out.push_back(arm + leg + 1);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<int> bar_lengths(const Parts& strict_parts) {
    for (std::size_t i = 1; i < strict_parts.size(); ++i) {
        if (strict_parts[i] >= strict_parts[i - 1]) {
            throw std::invalid_argument("parts must be distinct and decreasing");
        }
    }
    const Parts rows = shift_symmetric_rows(strict_parts);
    const auto heights = column_heights(rows);
    std::vector<int> out;
    for (std::size_t i = 0; i < strict_parts.size(); ++i) {
        // Shifted row i occupies columns i+1 .. i+lambda_i (0-based) of the diagram.
        for (int c = static_cast<int>(i) + 1; c <= static_cast<int>(i) + strict_parts[i]; ++c) {
            const int arm = rows[i] - c - 1;
            const int leg = heights[static_cast<std::size_t>(c)] - static_cast<int>(i) - 1;
            out.push_back(arm + leg + 1);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool has_hook(const Parts& parts, int h) {
    const auto heights = column_heights(parts);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            if (parts[i] - j + heights[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1 == h) {
                return true;
            }
        }
    }
    return false;
}

bool is_core(const Parts& parts, int t) {
    require_positive(t, "t");
    return !has_hook(parts, t);
}

bool is_self_conjugate(const Parts& parts) {
    const auto heights = column_heights(parts);
    return Parts(heights.begin(), heights.end()) == parts;
}

bool is_bar_core(const Parts& strict_parts, int t) {
    require_positive(t, "t");
    const auto bars = bar_lengths(strict_parts);
    return std::find(bars.begin(), bars.end(), t) == bars.end();
}

std::string CountTable::to_csv() const {
    std::string out = "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) {
        out += std::to_string(n) + "," + counts[n].str() + "\n";
    }
    return out;
}

std::string CountTable::to_json() const {
    nlohmann::ordered_json j;
    j["quantity"] = quantity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : parameters) {
        params[name] = value;
    }
    j["parameters"] = params;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < counts.size(); ++n) {
        nlohmann::ordered_json row;
        row["n"] = n;
        if (counts[n] <= std::numeric_limits<std::uint64_t>::max()) {
            row["count"] = counts[n].convert_to<std::uint64_t>();
        } else {
            row["count"] = counts[n].str();
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
}

CountTable core_counts(int t, int N) {
    require_positive(t, "t");
    return make_table("t-cores", {{"t", t}}, N,
                      [&](int n) { return Count(count_filtered(n, [&](const Parts& p) { return is_core(p, t); })); });
}

CountTable selfconj_core_counts(int t, int N) {
    require_positive(t, "t");
    return make_table("self-conjugate t-cores", {{"t", t}}, N, [&](int n) {
        return Count(count_filtered(n, [&](const Parts& p) { return is_self_conjugate(p) && is_core(p, t); }));
    });
}

CountTable barcore_counts(int t, int N) {
    require_odd(t, "t");
    return make_table("t-bar-cores", {{"t", t}}, N, [&](int n) {
        return Count(count_filtered_strict(n, [&](const Parts& p) { return is_bar_core(p, t); }));
    });
}

CountTable st_core_counts(int s, int t, int N) {
    require_positive(s, "s");
    require_positive(t, "t");
    return make_table("(s,t)-cores", {{"s", s}, {"t", t}}, N, [&](int n) {
        return Count(count_filtered(n, [&](const Parts& p) { return is_core(p, s) && is_core(p, t); }));
    });
}

CountTable selfconj_st_core_counts(int s, int t, int N) {
    require_positive(s, "s");
    require_positive(t, "t");
    return make_table("self-conjugate (s,t)-cores", {{"s", s}, {"t", t}}, N, [&](int n) {
        return Count(count_filtered(
            n, [&](const Parts& p) { return is_self_conjugate(p) && is_core(p, s) && is_core(p, t); }));
    });
}

CountTable stbar_core_counts(int s, int t, int N) {
    require_odd(s, "s");
    require_odd(t, "t");
    return make_table("(s-bar,t-bar)-cores", {{"s", s}, {"t", t}}, N, [&](int n) {
        return Count(count_filtered_strict(n, [&](const Parts& p) { return is_bar_core(p, s) && is_bar_core(p, t); }));
    });
}

Count q_tuple_count(int s_p, int t_p, int g, int w) {
    require_n(w);
    return q_tuple_counts(s_p, t_p, g, w).counts.back();
}

CountTable q_tuple_counts(int s_p, int t_p, int g, int W) {
    require_positive(s_p, "s'");
    require_positive(t_p, "t'");
    require_positive(g, "g");
    require_n(W);
    const auto base = base_counts(
        W, [&](int m) { return count_filtered(m, [&](const Parts& p) { return is_core(p, s_p) && is_core(p, t_p); }); });
    return {"core tuples", {{"s'", s_p}, {"t'", t_p}, {"g", g}}, power(base, g)};
}

CountTable q_bar_tuple_counts(int s_p, int t_p, int g, int W) {
    require_odd(s_p, "s'");
    require_odd(t_p, "t'");
    require_odd(g, "g");
    require_n(W);
    const auto straight = base_counts(
        W, [&](int m) { return count_filtered(m, [&](const Parts& p) { return is_core(p, s_p) && is_core(p, t_p); }); });
    const auto bar = base_counts(W, [&](int m) {
        return count_filtered_strict(m, [&](const Parts& p) { return is_bar_core(p, s_p) && is_bar_core(p, t_p); });
    });
    return {"bar quotient tuples", {{"s'", s_p}, {"t'", t_p}, {"g", g}}, convolve(bar, power(straight, (g - 1) / 2))};
}

std::uint64_t not_g_core_count(int n, int t, int g, Variant variant) {
    require_positive(t, "t");
    require_positive(g, "g");
    switch (variant) {
        case Variant::straight:
            return count_filtered(n, [&](const Parts& p) { return is_core(p, t) && !is_core(p, g); });
        case Variant::selfconj:
            return count_filtered(
                n, [&](const Parts& p) { return is_self_conjugate(p) && is_core(p, t) && !is_core(p, g); });
        case Variant::bar:
            require_odd(t, "t");
            require_odd(g, "g");
            return count_filtered_strict(n, [&](const Parts& p) { return is_bar_core(p, t) && !is_bar_core(p, g); });
    }
    throw std::invalid_argument("unknown variant");
}

CountTable not_g_core_counts(int t, int g, Variant variant, int N) {
    const char* names[] = {"t-cores not g-cores", "self-conjugate t-cores not g-cores", "t-bar-cores not g-bar-cores"};
    return make_table(names[static_cast<int>(variant)], {{"t", t}, {"g", g}}, N,
                      [&](int n) { return Count(not_g_core_count(n, t, g, variant)); });
}

std::vector<Parts> all_st_cores(int s, int t) {
    require_coprime_pair(s, t);
    const int window = std::min(s, t);
    return grow_finite([&](const Parts& mu) {
        std::vector<Parts> out;
        const int top = mu.empty() ? 0 : mu.front();
        // Row-one cells right of row two have hooks 1 .. lambda_1 - lambda_2.
        for (int m = std::max(top, 1); m < top + window; ++m) {
            Parts lambda{m};
            lambda.insert(lambda.end(), mu.begin(), mu.end());
            if (is_core(lambda, s) && is_core(lambda, t)) out.push_back(std::move(lambda));
        }
        return out;
    });
}

std::vector<Parts> all_selfconj_st_cores(int s, int t) {
    require_coprime_pair(s, t);
    const int window = std::min(s, t);
    return grow_finite([&](const Parts& mu) {
        std::vector<Parts> out;
        const int k = static_cast<int>(mu.size());
        // New hook with arm = leg = m - 1 wrapped around mu.
        for (int m = k + 1; m <= k + window; ++m) {
            Parts lambda{m};
            for (int x : mu) lambda.push_back(x + 1);
            lambda.insert(lambda.end(), static_cast<std::size_t>(m - 1 - k), 1);
            if (is_core(lambda, s) && is_core(lambda, t)) out.push_back(std::move(lambda));
        }
        return out;
    });
}

std::vector<Parts> all_stbar_cores(int s, int t) {
    require_coprime_pair(s, t);
    require_odd(s, "s");
    require_odd(t, "t");
    const int window = std::min(s, t);
    return grow_finite([&](const Parts& mu) {
        std::vector<Parts> out;
        const int top = mu.empty() ? 0 : mu.front();
        // A largest part m > t needs m - t among the smaller parts.
        for (int m = top + 1; m <= top + window; ++m) {
            Parts lambda{m};
            lambda.insert(lambda.end(), mu.begin(), mu.end());
            if (is_bar_core(lambda, s) && is_bar_core(lambda, t)) out.push_back(std::move(lambda));
        }
        return out;
    });
}

ExtremalStats extremal_stats(int s, int t) {
    const auto cores = all_st_cores(s, t);
    ExtremalStats stats;
    stats.total_count = cores.size();
    for (const auto& c : cores) {
        stats.max_size = std::max(stats.max_size, std::accumulate(c.begin(), c.end(), 0));
    }
    return stats;
}

std::uint64_t st_core_count_formula(int s, int t) {
    require_coprime_pair(s, t);
    Count binom = 1;
    for (int i = 1; i <= s; ++i) {
        binom = binom * (t + i) / i;
    }
    return (binom / (s + t)).convert_to<std::uint64_t>();
}

std::uint64_t st_core_max_size_formula(int s, int t) {
    require_coprime_pair(s, t);
    const auto ss = static_cast<std::uint64_t>(s);
    const auto tt = static_cast<std::uint64_t>(t);
    return (ss * ss - 1) * (tt * tt - 1) / 24;
}

}  // namespace simcore::oracle
