#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simcore {

using BigInt = boost::multiprecision::cpp_int;

/// Power series c_0 + c_1 x + ... + c_N x^N with exact integer coefficients.
/// Products and sums keep the smaller truncation of their operands.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation);
    /// Coefficients beyond `truncation` are dropped; missing ones are zero.
    TruncatedSeries(int truncation, std::vector<BigInt> coeffs);

    static TruncatedSeries one(int truncation);

    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^n. Throws std::out_of_range past the truncation.
    const BigInt& operator[](int n) const;
    BigInt& operator[](int n);

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries pow(int e) const;

    /// S(x^g), kept to the same truncation.
    TruncatedSeries substitute_power(int g) const;
    TruncatedSeries truncated(int n) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

/// (1 - x^a)^b to degree N; b may be negative.
TruncatedSeries product_term(int a, int b, int N);

/// p(0..N).
TruncatedSeries partition_gf(int N);
/// t-cores: prod (1 - x^{tn})^t / (1 - x^n).
TruncatedSeries core_gf(int t, int N);
/// Self-conjugate t-cores (separate even-t and odd-t products).
TruncatedSeries selfconj_core_gf(int t, int N);
/// t-bar-cores, t odd.
TruncatedSeries barcore_gf(int t, int N);

/// Size polynomials of the finite sets of cores for gcd(s,t) = 1, collected
/// by walking lattice paths. Parameters equal to 1 give the constant 1.
TruncatedSeries st_core_polynomial(int s, int t, int N);
TruncatedSeries selfconj_st_core_polynomial(int s, int t, int N);
TruncatedSeries stbar_core_polynomial(int s, int t, int N);

/// (s,t)-cores. Coprime: the finite polynomial; otherwise
/// Psi_{s',t'}(x^g)^g F_g(x).
TruncatedSeries psi_st_gf(int s, int t, int N);

/// Self-conjugate (s,t)-cores, g = gcd(s,t) > 1.
/// Even g: F*_g(x) Psi_{s',t'}(x^{2g})^{g/2}.
/// Odd g:  F*_g(x) Psi_{s',t'}(x^{2g})^{(g-1)/2} Psi*_{s',t'}(x^g).
TruncatedSeries psi_star_st_gf(int s, int t, int N);

/// (s-bar,t-bar)-cores, s and t odd. Coprime: the finite polynomial;
/// otherwise Psi-bar_{s',t'}(x^g) Psi_{s',t'}(x^g)^{(g-1)/2} F-bar_g(x).
TruncatedSeries psi_bar_st_gf(int s, int t, int N);

// Convolution forms of the same counts, driven by tuple counts q[w] supplied
// by the caller (q must reach degree N / g, or N / 2g for the even case).

/// sum_w q[w] f_g(n - g w).
TruncatedSeries psi_st_convolution(int s, int t, const TruncatedSeries& q, int N);
/// Even g: sum_w q[w] f*_g(n - 2 w g), q counting g/2-tuples.
TruncatedSeries psi_star_even_convolution(int s, int t, const TruncatedSeries& q, int N);
/// Odd g: sum q[w1] c[w2] f*_g(n - (2 w1 + w2) g), q counting (g-1)/2-tuples
/// and c the self-conjugate (s',t')-core counts.
TruncatedSeries psi_star_odd_convolution(int s, int t, const TruncatedSeries& q, const TruncatedSeries& c, int N);
/// sum_w q[w] f-bar_g(n - g w), q counting bar quotients.
TruncatedSeries psi_bar_convolution(int s, int t, const TruncatedSeries& q, int N);

/// Both sides of c(gk + r) = sum_m a(k - m) b(gm + r) for C = A(x^g) B(x),
/// k = 0 .. (N - r) / g with N the truncation of B.
struct ProgressionValues {
    int g = 0;
    int r = 0;
    std::vector<BigInt> product;
    std::vector<BigInt> convolved;

    bool agree() const { return product == convolved; }
};

ProgressionValues progression_extract(const TruncatedSeries& a, const TruncatedSeries& b, int g, int r);

/// Residues r in [0, g) with c(gk + r) divisible by M for every gk + r up to
/// the truncation. A finite check, not a proof.
struct ScanReport {
    int modulus = 0;
    int g = 0;
    std::vector<int> residues;
    int verified_to = 0;
};

ScanReport congruence_scan(const TruncatedSeries& s, int g, int modulus);

}  // namespace simcore
