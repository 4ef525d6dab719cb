#include "simcore/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "simcore/lattice.hpp"

namespace simcore {

namespace {

void require_truncation(int N) {
    if (N < 0) {
        throw std::invalid_argument("truncation must be nonnegative");
    }
}

void require_odd(int t, const char* what) {
    if (t < 1 || t % 2 == 0) {
        throw std::invalid_argument(std::string(what) + " must be odd and positive");
    }
}

// In-place multiplication by (1 - x^a), (1 - x^a)^{-1}, (1 + x^a), (1 + x^a)^{-1}.
void times_one_minus(std::vector<BigInt>& c, int a) {
    for (int n = static_cast<int>(c.size()) - 1; n >= a; --n) {
        c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - a)];
    }
}

void divide_one_minus(std::vector<BigInt>& c, int a) {
    for (int n = a; n < static_cast<int>(c.size()); ++n) {
        c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - a)];
    }
}

void times_one_plus(std::vector<BigInt>& c, int a) {
    for (int n = static_cast<int>(c.size()) - 1; n >= a; --n) {
        c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - a)];
    }
}

void divide_one_plus(std::vector<BigInt>& c, int a) {
    for (int n = a; n < static_cast<int>(c.size()); ++n) {
        c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - a)];
    }
}

void apply_term(std::vector<BigInt>& c, int a, int b) {
    for (int k = 0; k < b; ++k) times_one_minus(c, a);
    for (int k = 0; k < -b; ++k) divide_one_minus(c, a);
}

std::vector<BigInt> unit(int N) {
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    return c;
}

std::pair<int, int> reduced(int s, int t) {
    const int g = std::gcd(s, t);
    return {s / g, t / g};
}

void require_pair(int s, int t) {
    if (s <= 1 || t <= 1) {
        throw std::invalid_argument("s and t must exceed 1");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int truncation) {
    require_truncation(truncation);
    coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

TruncatedSeries::TruncatedSeries(int truncation, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    require_truncation(truncation);
    coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

TruncatedSeries TruncatedSeries::one(int truncation) {
    TruncatedSeries s(truncation);
    s.coeffs_[0] = 1;
    return s;
}

const BigInt& TruncatedSeries::operator[](int n) const {
    if (n < 0 || n > truncation()) {
        throw std::out_of_range("coefficient index past truncation");
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

BigInt& TruncatedSeries::operator[](int n) {
    if (n < 0 || n > truncation()) {
        throw std::out_of_range("coefficient index past truncation");
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    const int N = std::min(truncation(), other.truncation());
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) {
        out.coeffs_[static_cast<std::size_t>(n)] =
            coeffs_[static_cast<std::size_t>(n)] + other.coeffs_[static_cast<std::size_t>(n)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    const int N = std::min(truncation(), other.truncation());
    TruncatedSeries out(N);
    for (int i = 0; i <= N; ++i) {
        const BigInt& a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            out.coeffs_[static_cast<std::size_t>(i + j)] += a * other.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) {
        throw std::invalid_argument("series exponent must be nonnegative");
    }
    TruncatedSeries out = one(truncation());
    for (int k = 0; k < e; ++k) {
        out = out * *this;
    }
    return out;
}

TruncatedSeries TruncatedSeries::substitute_power(int g) const {
    if (g < 1) {
        throw std::invalid_argument("substitution power must be positive");
    }
    TruncatedSeries out(truncation());
    for (int n = 0; n * g <= truncation(); ++n) {
        out.coeffs_[static_cast<std::size_t>(n * g)] = coeffs_[static_cast<std::size_t>(n)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
    if (n > truncation()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return TruncatedSeries(n, coeffs_);
}

TruncatedSeries product_term(int a, int b, int N) {
    if (a < 1) {
        throw std::invalid_argument("product_term needs a >= 1");
    }
    require_truncation(N);
    auto c = unit(N);
    apply_term(c, a, b);
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries partition_gf(int N) {
    require_truncation(N);
    auto c = unit(N);
    for (int n = 1; n <= N; ++n) divide_one_minus(c, n);
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries core_gf(int t, int N) {
    if (t < 1) {
        throw std::invalid_argument("t must be positive");
    }
    require_truncation(N);
    auto c = unit(N);
    for (int n = 1; n <= N; ++n) {
        divide_one_minus(c, n);
        if (t * n <= N) apply_term(c, t * n, t);
    }
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries selfconj_core_gf(int t, int N) {
    if (t < 1) {
        throw std::invalid_argument("t must be positive");
    }
    require_truncation(N);
    auto c = unit(N);
    if (t % 2 == 0) {
        for (int n = 1; 2 * n - 1 <= N; ++n) {
            times_one_plus(c, 2 * n - 1);
            if (2 * t * n <= N) apply_term(c, 2 * t * n, t / 2);
        }
    } else {
        for (int n = 1; 2 * n - 1 <= N; ++n) {
            times_one_plus(c, 2 * n - 1);
            if (t * (2 * n - 1) <= N) divide_one_plus(c, t * (2 * n - 1));
            if (2 * t * n <= N) apply_term(c, 2 * t * n, (t - 1) / 2);
        }
    }
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries barcore_gf(int t, int N) {
    require_odd(t, "t");
    require_truncation(N);
    auto c = unit(N);
    for (int n = 1; n <= N; ++n) {
        divide_one_minus(c, n);
        if (2 * n <= N) times_one_minus(c, 2 * n);
        if (t * n <= N) apply_term(c, t * n, (t + 1) / 2);
        if (2 * t * n <= N) divide_one_minus(c, 2 * t * n);
    }
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries st_core_polynomial(int s, int t, int N) {
    require_truncation(N);
    TruncatedSeries out = TruncatedSeries::one(N);
    if (s == 1 || t == 1) return out;
    out[0] = 0;
    for_each_anderson_path(s, t, [&](const MonotonicPath& path) {
        const int n = anderson_path_to_core(path, s, t).size();
        if (n <= N) out[n] += 1;
    });
    return out;
}

TruncatedSeries selfconj_st_core_polynomial(int s, int t, int N) {
    require_truncation(N);
    TruncatedSeries out = TruncatedSeries::one(N);
    if (s == 1 || t == 1) return out;
    out[0] = 0;
    for_each_path(s / 2, t / 2, [&](const MonotonicPath& path) {
        const int n = dh_path_to_selfconj(path, s, t).size();
        if (n <= N) out[n] += 1;
    });
    return out;
}

TruncatedSeries stbar_core_polynomial(int s, int t, int N) {
    require_truncation(N);
    TruncatedSeries out = TruncatedSeries::one(N);
    if (s == 1 || t == 1) return out;
    if (s > t) std::swap(s, t);
    out[0] = 0;
    for_each_path((s - 1) / 2, (t - 1) / 2, [&](const MonotonicPath& path) {
        const int n = yy_path_to_barcore(path, s, t).size();
        if (n <= N) out[n] += 1;
    });
    return out;
}

TruncatedSeries psi_st_gf(int s, int t, int N) {
    require_pair(s, t);
    const int g = std::gcd(s, t);
    if (g == 1) return st_core_polynomial(s, t, N);
    const auto [sp, tp] = reduced(s, t);
    return st_core_polynomial(sp, tp, N).substitute_power(g).pow(g) * core_gf(g, N);
}

TruncatedSeries psi_star_st_gf(int s, int t, int N) {
    require_pair(s, t);
    const int g = std::gcd(s, t);
    if (g == 1) {
        throw std::invalid_argument("psi_star_st_gf needs gcd(s,t) > 1; use selfconj_st_core_polynomial");
    }
    const auto [sp, tp] = reduced(s, t);
    const auto base = st_core_polynomial(sp, tp, N).substitute_power(2 * g);
    if (g % 2 == 0) {
        return selfconj_core_gf(g, N) * base.pow(g / 2);
    }
    return selfconj_core_gf(g, N) * base.pow((g - 1) / 2) *
           selfconj_st_core_polynomial(sp, tp, N).substitute_power(g);
}

TruncatedSeries psi_bar_st_gf(int s, int t, int N) {
    require_pair(s, t);
    require_odd(s, "s");
    require_odd(t, "t");
    const int g = std::gcd(s, t);
    if (g == 1) return stbar_core_polynomial(s, t, N);
    const auto [sp, tp] = reduced(s, t);
    return stbar_core_polynomial(sp, tp, N).substitute_power(g) *
           st_core_polynomial(sp, tp, N).substitute_power(g).pow((g - 1) / 2) * barcore_gf(g, N);
}

TruncatedSeries psi_st_convolution(int s, int t, const TruncatedSeries& q, int N) {
    require_pair(s, t);
    const int g = std::gcd(s, t);
    const auto f = core_gf(g, N);
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) {
        for (int w = 0; g * w <= n; ++w) {
            out[n] += q[w] * f[n - g * w];
        }
    }
    return out;
}

TruncatedSeries psi_star_even_convolution(int s, int t, const TruncatedSeries& q, int N) {
    require_pair(s, t);
    const int g = std::gcd(s, t);
    if (g % 2 != 0) {
        throw std::invalid_argument("even convolution needs even gcd(s,t)");
    }
    const auto f = selfconj_core_gf(g, N);
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) {
        for (int w = 0; 2 * w * g <= n; ++w) {
            out[n] += q[w] * f[n - 2 * w * g];
        }
    }
    return out;
}

TruncatedSeries psi_star_odd_convolution(int s, int t, const TruncatedSeries& q, const TruncatedSeries& c, int N) {
    require_pair(s, t);
    const int g = std::gcd(s, t);
    if (g % 2 == 0 || g == 1) {
        throw std::invalid_argument("odd convolution needs odd gcd(s,t) > 1");
    }
    const auto f = selfconj_core_gf(g, N);
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) {
        for (int w1 = 0; 2 * w1 * g <= n; ++w1) {
            for (int w2 = 0; (2 * w1 + w2) * g <= n; ++w2) {
                out[n] += q[w1] * c[w2] * f[n - (2 * w1 + w2) * g];
            }
        }
    }
    return out;
}

TruncatedSeries psi_bar_convolution(int s, int t, const TruncatedSeries& q, int N) {
    require_pair(s, t);
    require_odd(s, "s");
    require_odd(t, "t");
    const int g = std::gcd(s, t);
    const auto f = barcore_gf(g, N);
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n) {
        for (int w = 0; g * w <= n; ++w) {
            out[n] += q[w] * f[n - g * w];
        }
    }
    return out;
}

ProgressionValues progression_extract(const TruncatedSeries& a, const TruncatedSeries& b, int g, int r) {
    if (g < 2 || r < 1 || r > g - 1) {
        throw std::invalid_argument("progression needs 1 <= r <= g - 1");
    }
    const int N = b.truncation();
    if (a.truncation() < N / g) {
        throw std::invalid_argument("A is truncated below N / g");
    }
    ProgressionValues out;
    out.g = g;
    out.r = r;
    TruncatedSeries lifted(N);
    for (int k = 0; k * g <= N; ++k) lifted[k * g] = a[k];
    const auto product = lifted * b;
    for (int k = 0; g * k + r <= N; ++k) {
        out.product.push_back(product[g * k + r]);
        BigInt sum = 0;
        for (int m = 0; m <= k; ++m) {
            sum += a[k - m] * b[g * m + r];
        }
        out.convolved.push_back(sum);
    }
    return out;
}

ScanReport congruence_scan(const TruncatedSeries& s, int g, int modulus) {
    if (g < 2 || modulus < 2) {
        throw std::invalid_argument("congruence_scan needs g >= 2 and M >= 2");
    }
    ScanReport report;
    report.modulus = modulus;
    report.g = g;
    report.verified_to = s.truncation();
    for (int r = 0; r < g; ++r) {
        bool holds = true;
        for (int n = r; n <= s.truncation() && holds; n += g) {
            holds = s[n] % modulus == 0;
        }
        if (holds) report.residues.push_back(r);
    }
    return report;
}

}  // namespace simcore
