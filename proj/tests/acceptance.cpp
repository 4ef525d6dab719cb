#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "simcore/bar_partition.hpp"
#include "simcore/core_quotient.hpp"
#include "simcore/encodings.hpp"
#include "simcore/lattice.hpp"
#include "simcore/oracle.hpp"
#include "simcore/partition.hpp"
#include "simcore/series.hpp"
#include "simcore/verify.hpp"

using namespace simcore;

namespace {

// First failed expectation of one criterion, empty while everything holds.
struct Criterion {
    std::string failure;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failure.empty();
    failures += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << number << " " << title;
    if (!ok) {
        std::cout << " [" << c.failure << "]";
    } else if (!c.note.empty()) {
        std::cout << " [" << c.note << "]";
    }
    std::cout << std::endl;
}

std::vector<int> abs_sorted(std::vector<std::int64_t> v) {
    std::vector<int> out;
    for (auto x : v) out.push_back(static_cast<int>(x < 0 ? -x : x));
    std::sort(out.rbegin(), out.rend());
    return out;
}

TruncatedSeries from_counts(const oracle::CountTable& table) {
    std::vector<BigInt> c(table.counts.begin(), table.counts.end());
    const int n = static_cast<int>(c.size()) - 1;
    return TruncatedSeries(n, std::move(c));
}

bool same(const TruncatedSeries& s, const oracle::CountTable& table) {
    return s == from_counts(table);
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

bool has_residue(const ScanReport& r, int x) {
    return std::find(r.residues.begin(), r.residues.end(), x) != r.residues.end() && r.verified_to == 60;
}

const CheckResult* find_check(const SuiteResult& suite, const std::string& prefix) {
    for (const auto& c : suite.checks) {
        if (c.name.rfind(prefix, 0) == 0) return &c;
    }
    return nullptr;
}

void worked_examples(Criterion& c) {
    c.expect(bar_length_multiset({5, 3, 1}) == std::vector<int>{8, 6, 5, 4, 3, 3, 1, 1, 1}, "bar lengths of (5,3,1)");

    const auto anderson = anderson_grid(7, 11);
    const MonotonicPath pi12(7, 11, "URUURRURURURRURRRR");
    const Partition lambda12{5, 3, 3, 3, 2, 2, 1, 1, 1};
    const std::vector<int> hooks12{13, 10, 9, 8, 6, 5, 3, 2, 1};
    c.expect(abs_sorted(anderson.trapped(pi12)) == hooks12, "values trapped by the (7,11) path");
    c.expect(anderson_path_to_core(pi12, 7, 11) == lambda12, "(7,11) path to core");
    c.expect(first_column_hooks(lambda12).values() == hooks12, "first-column hooks of (5,3^3,2^2,1^3)");

    const Partition star{4, 2, 1, 1};
    c.expect(gks_encode(star, 3).entries() == std::vector<int>{2, 0, -2}, "GKS tuple of (4,2,1,1)");
    c.expect(zeta(star, 3) == BarPartition{4, 1}, "zeta((4,2,1,1)) = (4,1)");
    c.expect(olsson_encode({4, 1}, 3).entries() == std::vector<int>{2}, "Olsson tuple of (4,1)");
    c.expect(diagonal_hooks(star) == std::vector<int>{7, 1}, "diagonal hooks of (4,2,1,1)");
    c.expect(diagonal_hooks_from_tuple(CoreTuple(3, {2, 0, -2})) == std::vector<int>{7, 1}, "diagonal hooks from tuple");

    const MonotonicPath pi45(3, 5, "RURRRUUR");
    c.expect(abs_sorted(dh_grid(7, 11).trapped(pi45)) == std::vector<int>{5, 3, 1}, "DH trapped values");
    c.expect(dh_path_to_selfconj(pi45, 7, 11) == Partition{3, 3, 3}, "DH path to (3^3)");
    c.expect(diagonal_hooks({3, 3, 3}) == std::vector<int>{5, 3, 1}, "diagonal hooks of (3^3)");
    c.expect(yy_path_to_barcore(pi45, 7, 11) == BarPartition{6}, "Yin-Yang path to (6)");
    c.expect(gamma({3, 3, 3}, 7, 11) == BarPartition{6}, "gamma((3^3)) = (6)");

    const Partition lambda{21, 20, 12, 12, 12, 12, 11, 11, 10, 9, 8, 6, 2, 2, 2, 2, 2, 2, 2, 2, 1};
    const BarPartition lambda_bar{20, 19, 18, 10, 8, 7, 4};
    c.expect(big_gamma(lambda, 21, 33) == lambda_bar, "Gamma_{21,33}");
    c.expect(big_gamma_inverse(lambda_bar, 21, 33) == lambda, "Gamma_{21,33} inverse");
    const auto tower = decompose(lambda, 3);
    c.expect(tower.core == star, "3-core of the (21,33) example");
    c.expect(tower.quotient ==
                 std::vector<Partition>{{5, 3, 3, 3, 2, 2, 1, 1, 1}, {3, 3, 3}, {9, 6, 4, 1, 1}},
             "3-quotient of the (21,33) example");
    const auto bar = bar_decompose(lambda_bar, 3);
    c.expect(bar.core == BarPartition{4, 1}, "3-bar-core of the bar image");
    c.expect(bar.bar_component == BarPartition{6}, "lambda_0 of the bar image");
    c.expect(bar.quotient == std::vector<Partition>{{5, 3, 3, 3, 2, 2, 1, 1, 1}}, "lambda_1 of the bar image");
    c.expect(bar.weight == 27 && lambda_bar.size() == 86, "bar size identity 86 = 5 + 3*27");
    c.note = "lambda_1 = (5,3^3,2^2,1^3), the size-consistent reading";
}

void counting_formulas(Criterion& c) {
    const struct {
        int s, t;
        std::uint64_t count;
        int max_size;
        std::uint64_t symmetric;
    } cases[] = {{2, 3, 2, 1, 0}, {5, 7, 66, 48, 10}, {7, 11, 1768, 240, 56}};
    for (const auto& k : cases) {
        const std::string tag = "(" + std::to_string(k.s) + "," + std::to_string(k.t) + ")";
        const auto stats = oracle::extremal_stats(k.s, k.t);
        c.expect(stats.total_count == k.count && oracle::st_core_count_formula(k.s, k.t) == k.count, tag + " count");
        c.expect(stats.max_size == k.max_size &&
                     oracle::st_core_max_size_formula(k.s, k.t) == static_cast<std::uint64_t>(k.max_size),
                 tag + " max size");
        std::uint64_t paths = 0;
        for_each_anderson_path(k.s, k.t, [&](const MonotonicPath&) { ++paths; });
        c.expect(paths == k.count, tag + " Anderson path count");
        if (k.symmetric == 0) continue;

        const int a = k.s / 2;
        const int b = k.t / 2;
        c.expect(binomial(a + b, a) == k.symmetric, tag + " binomial");
        std::set<Partition> selfconj;
        std::set<BarPartition> barcores;
        for (const auto& path : enumerate_paths(a, b)) {
            selfconj.insert(dh_path_to_selfconj(path, k.s, k.t));
            barcores.insert(yy_path_to_barcore(path, k.s, k.t));
        }
        c.expect(selfconj.size() == k.symmetric, tag + " self-conjugate count via paths");
        c.expect(barcores.size() == k.symmetric, tag + " bar count via paths");
        c.expect(oracle::all_selfconj_st_cores(k.s, k.t).size() == k.symmetric, tag + " self-conjugate oracle count");
        c.expect(oracle::all_stbar_cores(k.s, k.t).size() == k.symmetric, tag + " bar oracle count");
    }

    // Exhaustive over all partitions of n <= 48 for (5,7); (7,11) spot-checked below 40.
    BigInt total = 0;
    for (const auto& x : oracle::st_core_counts(5, 7, 48).counts) total += x;
    c.expect(total == 66, "(5,7) exhaustive oracle total");
    const auto grown = oracle::all_st_cores(7, 11);
    const auto direct = oracle::st_core_counts(7, 11, 40).counts;
    for (int n = 0; n <= 40; ++n) {
        const auto here = std::count_if(grown.begin(), grown.end(), [&](const oracle::Parts& p) {
            return std::accumulate(p.begin(), p.end(), 0) == n;
        });
        c.expect(direct[static_cast<std::size_t>(n)] == here, "(7,11) oracle spot check at n=" + std::to_string(n));
    }
    c.note = "(7,11) total and max size by growth enumeration and path count; exhaustive oracle at n<=40";
}

void generating_functions(Criterion& c) {
    for (int t = 1; t <= 7; ++t) {
        c.expect(same(core_gf(t, 30), oracle::core_counts(t, 30)), "F_" + std::to_string(t));
        c.expect(same(selfconj_core_gf(t, 30), oracle::selfconj_core_counts(t, 30)), "F*_" + std::to_string(t));
    }
    for (int t = 1; t <= 9; t += 2) {
        c.expect(same(barcore_gf(t, 30), oracle::barcore_counts(t, 30)), "Fbar_" + std::to_string(t));
    }
    for (const auto& [s, t] : {std::pair{4, 6}, {6, 9}, {6, 10}, {10, 15}}) {
        c.expect(same(psi_st_gf(s, t, 40), oracle::st_core_counts(s, t, 40)), "Psi");
    }
    for (const auto& [s, t] : {std::pair{6, 9}, {4, 6}, {6, 10}}) {
        c.expect(same(psi_star_st_gf(s, t, 40), oracle::selfconj_st_core_counts(s, t, 40)), "Psi*");
    }
    for (const auto& [s, t] : {std::pair{9, 15}, {15, 21}}) {
        c.expect(same(psi_bar_st_gf(s, t, 40), oracle::stbar_core_counts(s, t, 40)), "Psi-bar");
    }
}

void convolutions(Criterion& c) {
    const int N = 40;
    for (const auto& [s, t] : {std::pair{4, 6}, {6, 9}, {6, 10}, {10, 15}}) {
        const int g = std::gcd(s, t);
        const auto q = from_counts(oracle::q_tuple_counts(s / g, t / g, g, N));
        c.expect(psi_st_convolution(s, t, q, N) == psi_st_gf(s, t, N), "straight convolution");
    }
    for (const auto& [s, t] : {std::pair{4, 6}, {6, 10}}) {
        const int g = std::gcd(s, t);
        const auto q = from_counts(oracle::q_tuple_counts(s / g, t / g, g / 2, N));
        c.expect(psi_star_even_convolution(s, t, q, N) == psi_star_st_gf(s, t, N), "self-conjugate even convolution");
    }
    for (const auto& [s, t] : {std::pair{6, 9}, {9, 15}}) {
        const int g = std::gcd(s, t);
        const auto q = from_counts(oracle::q_tuple_counts(s / g, t / g, (g - 1) / 2, N));
        const auto sc = from_counts(oracle::selfconj_st_core_counts(s / g, t / g, N));
        c.expect(psi_star_odd_convolution(s, t, q, sc, N) == psi_star_st_gf(s, t, N), "self-conjugate odd convolution");
    }
    for (const auto& [s, t] : {std::pair{9, 15}, {15, 21}, {15, 25}}) {
        const int g = std::gcd(s, t);
        const auto q = from_counts(oracle::q_bar_tuple_counts(s / g, t / g, g, N));
        c.expect(psi_bar_convolution(s, t, q, N) == psi_bar_st_gf(s, t, N), "bar convolution");
    }
}

void congruences(Criterion& c) {
    c.expect(has_residue(congruence_scan(core_gf(5, 60), 5, 5), 4), "f_5 on 5k+4");
    c.expect(has_residue(congruence_scan(core_gf(7, 60), 7, 7), 5), "f_7 on 7k+5");
    c.expect(has_residue(congruence_scan(core_gf(11, 60), 11, 11), 6), "f_11 on 11k+6");
    c.expect(has_residue(congruence_scan(psi_st_gf(10, 15, 60), 5, 5), 4), "psi_{10,15} on 5k+4");
    const auto fbar = congruence_scan(barcore_gf(5, 60), 5, 2);
    c.expect(fbar.residues == std::vector<int>{3, 4} && fbar.verified_to == 60, "f_5bar even exactly on 5k+3, 5k+4");
    const auto psibar = congruence_scan(psi_bar_st_gf(15, 25, 60), 5, 2);
    c.expect(has_residue(psibar, 3) && has_residue(psibar, 4), "psi_{15bar,25bar} on 5k+3, 5k+4");
}

void bounds(Criterion& c) {
    for (int n = 4; n <= 40; ++n) {
        c.expect(oracle::not_g_core_count(n, 16, 4, oracle::Variant::straight) >= static_cast<std::uint64_t>(4 * (n / 4)),
                 "psi_{16\\4}(" + std::to_string(n) + ")");
    }
    for (int n = 7; n <= 35; ++n) {
        c.expect(oracle::not_g_core_count(n, 21, 7, oracle::Variant::bar) >= 4,
                 "psi_{21bar\\7bar}(" + std::to_string(n) + ")");
    }
    const auto suite = run_suite("oracle", 40);
    const auto* check = find_check(suite, "self-conjugate t-cores not g-cores");
    c.expect(check != nullptr && check->passed, check ? check->detail : "self-conjugate check missing");
    if (check) {
        const auto literal = check->detail.substr(check->detail.find(": ", check->detail.find("; ")) + 2);
        c.note = "self-conjugate bounds for g in {8,11}, t' in {2,4} checked in corrected form, terms with "
                 "f*_g(2)=0 dropped; the literal bounds are false at " +
                 literal;
    }
}

void round_trips(Criterion& c) {
    for (int t = 3; t <= 7; t += 2) {
        for (int n = 0; n <= 25; ++n) {
            oracle::for_each_partition(n, [&](const oracle::Parts& raw) {
                if (!oracle::is_self_conjugate(raw) || !oracle::is_core(raw, t)) return;
                const Partition p(raw);
                const auto b = zeta(p, t);
                c.expect(oracle::is_bar_core(b.parts(), t) && zeta_inverse(b, t) == p, "zeta on " + to_string(p));
            });
        }
    }
    int paths = 0;
    for (const auto& path : enumerate_paths(3, 5)) {
        ++paths;
        const auto p = dh_path_to_selfconj(path, 7, 11);
        const auto b = gamma(p, 7, 11);
        c.expect(b == yy_path_to_barcore(path, 7, 11), "gamma follows the path");
        c.expect(gamma_inverse(b, 7, 11) == p, "gamma round trip on " + to_string(p));
    }
    c.expect(paths == 56, "56 paths for (7,11)");
    int gammas = 0;
    for (int n = 0; n <= 30; ++n) {
        oracle::for_each_partition(n, [&](const oracle::Parts& raw) {
            if (!oracle::is_self_conjugate(raw) || !oracle::is_core(raw, 9) || !oracle::is_core(raw, 15)) return;
            ++gammas;
            const Partition p(raw);
            const auto b = big_gamma(p, 9, 15);
            c.expect(oracle::is_bar_core(b.parts(), 9) && oracle::is_bar_core(b.parts(), 15),
                     "Gamma image of " + to_string(p));
            c.expect(big_gamma_inverse(b, 9, 15) == p, "Gamma round trip on " + to_string(p));
        });
    }
    c.note = std::to_string(gammas) + " self-conjugate (9,15)-cores";
}

void structure(Criterion& c) {
    long checks = 0;
    for (const char* name : {"partitions", "bar-partitions", "core-quotient", "encodings"}) {
        const auto suite = run_suite(name, 40);
        for (const auto& check : suite.checks) {
            ++checks;
            c.expect(check.passed, suite.suite + ": " + check.name + " (" + check.detail + ")");
        }
    }
    c.note = std::to_string(checks) + " exhaustive checks";
}

}  // namespace

int main() {
    report(1, "worked-example fidelity", worked_examples);
    report(2, "counting formulas", counting_formulas);
    report(3, "generating-function equivalence", generating_functions);
    report(4, "convolution identities", convolutions);
    report(5, "congruences", congruences);
    report(6, "bound suites", bounds);
    report(7, "bijection round trips", round_trips);
    report(8, "structural invariants", structure);
    return failures == 0 ? 0 : 1;
}
