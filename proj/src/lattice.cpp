#include "simcore/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "simcore/core_quotient.hpp"
#include "simcore/encodings.hpp"

namespace simcore {

namespace {

void require_coprime(int s, int t) {
    if (s <= 1 || t <= 1) {
        throw std::invalid_argument("s and t must exceed 1");
    }
    if (std::gcd(s, t) != 1) {
        throw std::invalid_argument("s and t must be coprime");
    }
}

void require_odd_coprime(int s, int t) {
    require_coprime(s, t);
    if (s % 2 == 0 || t % 2 == 0) {
        throw std::invalid_argument("s and t must be odd");
    }
}

void prefix_rec(int row, int bound, std::vector<int>& prefixes, const std::vector<int>& limit, int cols,
                const std::function<void(const MonotonicPath&)>& visit) {
    if (row == static_cast<int>(prefixes.size())) {
        visit(MonotonicPath::from_row_prefixes(cols, prefixes));
        return;
    }
    const int top = std::min(bound, limit[static_cast<std::size_t>(row)]);
    for (int v = top; v >= 0; --v) {
        prefixes[static_cast<std::size_t>(row)] = v;
        prefix_rec(row + 1, v, prefixes, limit, cols, visit);
    }
}

std::vector<int> to_ints(const std::vector<std::int64_t>& values) {
    std::vector<int> out;
    out.reserve(values.size());
    for (auto v : values) {
        out.push_back(static_cast<int>(std::llabs(v)));
    }
    return out;
}

std::vector<std::int64_t> to_wide(const std::vector<int>& values) {
    return {values.begin(), values.end()};
}

}  // namespace

MonotonicPath::MonotonicPath(int rows, int cols, std::string steps)
    : rows_(rows), cols_(cols), steps_(std::move(steps)) {
    if (rows_ < 0 || cols_ < 0) {
        throw std::invalid_argument("path dimensions must be nonnegative");
    }
    const auto rights = std::count(steps_.begin(), steps_.end(), 'R');
    const auto ups = std::count(steps_.begin(), steps_.end(), 'U');
    if (rights + ups != static_cast<long>(steps_.size())) {
        throw std::invalid_argument("path steps must be 'R' or 'U'");
    }
    if (rights != cols_ || ups != rows_) {
        throw std::invalid_argument("path must have cols R steps and rows U steps");
    }
}

MonotonicPath MonotonicPath::from_row_prefixes(int cols, const std::vector<int>& prefixes) {
    const int rows = static_cast<int>(prefixes.size());
    std::string steps;
    int x = 0;
    for (int r = rows - 1; r >= 0; --r) {
        const int p = prefixes[static_cast<std::size_t>(r)];
        if (p < x || p > cols) {
            throw std::invalid_argument("row prefixes must be nonincreasing downward and within the grid");
        }
        steps.append(static_cast<std::size_t>(p - x), 'R');
        steps.push_back('U');
        x = p;
    }
    steps.append(static_cast<std::size_t>(cols - x), 'R');
    return MonotonicPath(rows, cols, std::move(steps));
}

std::vector<int> MonotonicPath::row_prefixes() const {
    std::vector<int> prefixes(static_cast<std::size_t>(rows_), 0);
    int x = 0;
    int up = 0;
    for (char c : steps_) {
        if (c == 'R') {
            ++x;
        } else {
            prefixes[static_cast<std::size_t>(rows_ - 1 - up)] = x;
            ++up;
        }
    }
    return prefixes;
}

SignedGrid::SignedGrid(int rows, int cols, std::vector<std::int64_t> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
        throw std::invalid_argument("grid value count does not match dimensions");
    }
    std::vector<int> positives(static_cast<std::size_t>(rows_), 0);
    for (int r = 0; r < rows_; ++r) {
        int k = 0;
        while (k < cols_ && values_[static_cast<std::size_t>(r * cols_ + k)] > 0) {
            ++k;
        }
        for (int c = k; c < cols_; ++c) {
            if (values_[static_cast<std::size_t>(r * cols_ + c)] >= 0) {
                throw std::invalid_argument("grid signs are not separated by a monotonic border");
            }
        }
        positives[static_cast<std::size_t>(r)] = k;
    }
    border_ = MonotonicPath::from_row_prefixes(cols_, positives);
}

std::int64_t SignedGrid::value(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw std::out_of_range("grid coordinates out of range");
    }
    return values_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

std::vector<std::int64_t> SignedGrid::trapped(const MonotonicPath& path) const {
    if (path.rows() != rows_ || path.cols() != cols_) {
        throw std::invalid_argument("path dimensions do not match grid");
    }
    const auto p = path.row_prefixes();
    const auto b = border_.row_prefixes();
    std::vector<std::int64_t> out;
    for (int r = 0; r < rows_; ++r) {
        const auto [lo, hi] = std::minmax(p[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(r)]);
        for (int c = lo; c < hi; ++c) {
            out.push_back(values_[static_cast<std::size_t>(r * cols_ + c)]);
        }
    }
    return out;
}

MonotonicPath SignedGrid::path_trapping(const std::vector<std::int64_t>& values) const {
    std::set<std::int64_t> wanted;
    for (auto v : values) {
        if (!wanted.insert(std::llabs(v)).second) {
            throw std::invalid_argument("trapped values must be distinct");
        }
    }
    std::set<std::int64_t> present;
    for (auto v : values_) present.insert(std::llabs(v));
    for (auto v : wanted) {
        if (!present.count(v)) {
            throw std::invalid_argument("values are not all entries of the grid");
        }
    }
    const auto b = border_.row_prefixes();
    std::vector<int> prefixes(static_cast<std::size_t>(rows_), 0);
    std::set<std::int64_t> used;
    const auto search = [&](const auto& self, int r, int bound) -> bool {
        if (r == rows_) return used.size() == wanted.size();
        for (int p = 0; p <= bound; ++p) {
            const auto [lo, hi] = std::minmax(p, b[static_cast<std::size_t>(r)]);
            std::vector<std::int64_t> row;
            bool ok = true;
            for (int c = lo; c < hi && ok; ++c) {
                const auto v = std::llabs(values_[static_cast<std::size_t>(r * cols_ + c)]);
                ok = wanted.count(v) && !used.count(v) && std::find(row.begin(), row.end(), v) == row.end();
                row.push_back(v);
            }
            if (!ok) continue;
            used.insert(row.begin(), row.end());
            prefixes[static_cast<std::size_t>(r)] = p;
            if (self(self, r + 1, p)) return true;
            for (auto v : row) used.erase(v);
        }
        return false;
    };
    if (!search(search, 0, cols_)) {
        throw std::invalid_argument("values do not cut out a monotonic path");
    }
    return MonotonicPath::from_row_prefixes(cols_, prefixes);
}

std::string SignedGrid::to_csv() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ',';
            out << values_[static_cast<std::size_t>(r * cols_ + c)];
        }
        out << '\n';
    }
    return out.str();
}

void for_each_path(int rows, int cols, const std::function<void(const MonotonicPath&)>& visit) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("path dimensions must be nonnegative");
    }
    std::vector<int> prefixes(static_cast<std::size_t>(rows), 0);
    const std::vector<int> limit(static_cast<std::size_t>(rows), cols);
    prefix_rec(0, cols, prefixes, limit, cols, visit);
}

std::vector<MonotonicPath> enumerate_paths(int rows, int cols) {
    std::vector<MonotonicPath> out;
    for_each_path(rows, cols, [&](const MonotonicPath& p) { out.push_back(p); });
    return out;
}

SignedGrid anderson_grid(int s, int t) {
    require_coprime(s, t);
    std::vector<std::int64_t> values;
    const std::int64_t top = static_cast<std::int64_t>(s) * t - s - t;
    for (int r = 0; r < s; ++r) {
        for (int c = 0; c < t; ++c) {
            values.push_back(top - static_cast<std::int64_t>(c) * s - static_cast<std::int64_t>(r) * t);
        }
    }
    return SignedGrid(s, t, std::move(values));
}

Partition anderson_path_to_core(const MonotonicPath& path, int s, int t) {
    const auto trapped = anderson_grid(s, t).trapped(path);
    for (auto v : trapped) {
        if (v < 0) {
            throw std::invalid_argument("path dips below the border");
        }
    }
    return from_first_column_hooks(BetaSet(to_ints(trapped)));
}

MonotonicPath anderson_core_to_path(const Partition& p, int s, int t) {
    if (!is_st_core(p, s, t)) {
        throw std::invalid_argument(to_string(p) + " is not an (s,t)-core");
    }
    const auto beta = first_column_hooks(p);
    return anderson_grid(s, t).path_trapping(to_wide(beta.values()));
}

void for_each_anderson_path(int s, int t, const std::function<void(const MonotonicPath&)>& visit) {
    const auto grid = anderson_grid(s, t);
    const auto limit = grid.border().row_prefixes();
    std::vector<int> prefixes(static_cast<std::size_t>(s), 0);
    prefix_rec(0, t, prefixes, limit, t, visit);
}

SignedGrid dh_grid(int s, int t) {
    require_coprime(s, t);
    const int rows = s / 2;
    const int cols = t / 2;
    std::vector<std::int64_t> values;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            values.push_back(static_cast<std::int64_t>(s) * t - static_cast<std::int64_t>(s) * (2 * j - 1) -
                             static_cast<std::int64_t>(t) * (2 * i - 1));
        }
    }
    return SignedGrid(rows, cols, std::move(values));
}

Partition dh_path_to_selfconj(const MonotonicPath& path, int s, int t) {
    const auto hooks = to_ints(dh_grid(s, t).trapped(path));
    return from_diagonal_hooks(hooks);
}

MonotonicPath dh_selfconj_to_path(const Partition& p, int s, int t) {
    if (!is_self_conjugate(p) || !is_st_core(p, s, t)) {
        throw std::invalid_argument(to_string(p) + " is not a self-conjugate (s,t)-core");
    }
    return dh_grid(s, t).path_trapping(to_wide(diagonal_hooks(p)));
}

SignedGrid yinyang_grid(int s, int t) {
    require_odd_coprime(s, t);
    if (s > t) {
        throw std::invalid_argument("Yin-Yang lattice needs s < t");
    }
    const int rows = (s - 1) / 2;
    const int cols = (t - 1) / 2;
    std::vector<std::int64_t> values;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            values.push_back(static_cast<std::int64_t>(t) * ((s + 1) / 2 - i) - static_cast<std::int64_t>(s) * j);
        }
    }
    return SignedGrid(rows, cols, std::move(values));
}

BarPartition yy_path_to_barcore(const MonotonicPath& path, int s, int t) {
    return BarPartition(to_ints(yinyang_grid(s, t).trapped(path)));
}

MonotonicPath yy_barcore_to_path(const BarPartition& b, int s, int t) {
    if (!is_stbar_core(b, s, t)) {
        throw std::invalid_argument(to_string(b) + " is not an (s-bar,t-bar)-core");
    }
    return yinyang_grid(s, t).path_trapping(to_wide(b.parts()));
}

BarPartition gamma(const Partition& p, int s, int t) {
    require_odd_coprime(s, t);
    if (s > t) std::swap(s, t);
    return yy_path_to_barcore(dh_selfconj_to_path(p, s, t), s, t);
}

Partition gamma_inverse(const BarPartition& b, int s, int t) {
    require_odd_coprime(s, t);
    if (s > t) std::swap(s, t);
    return dh_path_to_selfconj(yy_barcore_to_path(b, s, t), s, t);
}

namespace {

void require_big_gamma_parameters(int s, int t) {
    if (s <= 1 || t <= 1 || s % 2 == 0 || t % 2 == 0) {
        throw std::invalid_argument("s and t must be odd and exceed 1");
    }
    if (std::gcd(s, t) == 1) {
        throw std::invalid_argument("big_gamma needs gcd(s,t) > 1; use gamma for coprime parameters");
    }
}

}  // namespace

BarPartition big_gamma(const Partition& p, int s, int t) {
    require_big_gamma_parameters(s, t);
    if (!is_self_conjugate(p) || !is_st_core(p, s, t)) {
        throw std::invalid_argument(to_string(p) + " is not a self-conjugate (s,t)-core");
    }
    const int g = std::gcd(s, t);
    const int sp = s / g;
    const int tp = t / g;
    const auto tower = decompose(p, g);
    BarTower bar;
    bar.g = g;
    bar.core = zeta(tower.core, g);
    const auto& middle = tower.quotient[static_cast<std::size_t>((g - 1) / 2)];
    // (1,t')-cores are empty, so the middle component is too.
    bar.bar_component = (sp == 1 || tp == 1) ? BarPartition{} : gamma(middle, sp, tp);
    for (int i = 0; i <= (g - 3) / 2; ++i) {
        bar.quotient.push_back(tower.quotient[static_cast<std::size_t>(i)]);
    }
    return bar_reconstruct(bar);
}

Partition big_gamma_inverse(const BarPartition& b, int s, int t) {
    require_big_gamma_parameters(s, t);
    if (!is_stbar_core(b, s, t)) {
        throw std::invalid_argument(to_string(b) + " is not an (s-bar,t-bar)-core");
    }
    const int g = std::gcd(s, t);
    const int sp = s / g;
    const int tp = t / g;
    const auto bar = bar_decompose(b, g);
    StraightTower tower;
    tower.g = g;
    tower.core = zeta_inverse(bar.core, g);
    tower.quotient.resize(static_cast<std::size_t>(g));
    for (int i = 0; i <= (g - 3) / 2; ++i) {
        tower.quotient[static_cast<std::size_t>(i)] = bar.quotient[static_cast<std::size_t>(i)];
        tower.quotient[static_cast<std::size_t>(g - 1 - i)] = conjugate(bar.quotient[static_cast<std::size_t>(i)]);
    }
    tower.quotient[static_cast<std::size_t>((g - 1) / 2)] =
        (sp == 1 || tp == 1) ? Partition{} : gamma_inverse(bar.bar_component, sp, tp);
    return reconstruct(tower);
}

}  // namespace simcore
