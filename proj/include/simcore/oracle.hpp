#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simcore/bar_partition.hpp"
#include "simcore/partition.hpp"

// Brute-force enumeration and counting. Nothing here calls into the hook,
// quotient, lattice or series code; parts are plain vectors, largest first.
namespace simcore::oracle {

using Parts = std::vector<int>;
using Predicate = std::function<bool(const Parts&)>;
using Count = boost::multiprecision::cpp_int;

/// Every partition of n once, largest first part first.
void for_each_partition(int n, const std::function<void(const Parts&)>& visit);
std::vector<Partition> enumerate_partitions(int n);

/// Every partition of n into distinct parts once.
void for_each_strict_partition(int n, const std::function<void(const Parts&)>& visit);

/// First partition of n (in enumeration order) satisfying the predicate.
std::optional<Parts> find_partition(int n, const Predicate& keep);
std::optional<Parts> find_strict_partition(int n, const Predicate& keep);

std::uint64_t count_filtered(int n, const Predicate& keep);
std::uint64_t count_filtered_strict(int n, const Predicate& keep);

/// Hook lengths by walking each cell's arm and leg.
std::vector<int> hook_lengths(const Parts& parts);
/// Bar lengths as hook lengths of the shifted boxes inside the
/// shift-symmetric diagram.
std::vector<int> bar_lengths(const Parts& strict_parts);

bool has_hook(const Parts& parts, int h);
bool is_core(const Parts& parts, int t);
bool is_self_conjugate(const Parts& parts);
bool is_bar_core(const Parts& strict_parts, int t);

/// Counts indexed by n = 0..N, with the parameters that produced them.
struct CountTable {
    std::string quantity;
    std::vector<std::pair<std::string, int>> parameters;
    std::vector<Count> counts;

    std::string to_csv() const;
    std::string to_json() const;
};

CountTable core_counts(int t, int N);
CountTable selfconj_core_counts(int t, int N);
CountTable barcore_counts(int t, int N);
CountTable st_core_counts(int s, int t, int N);
CountTable selfconj_st_core_counts(int s, int t, int N);
CountTable stbar_core_counts(int s, int t, int N);

/// g-tuples of (s_p,t_p)-cores of total size w; s_p = t_p gives t'-cores.
Count q_tuple_count(int s_p, int t_p, int g, int w);
CountTable q_tuple_counts(int s_p, int t_p, int g, int W);
/// (lambda_0, lambda_1, ..., lambda_{(g-1)/2}) of total size w with lambda_0
/// an (s_p-bar,t_p-bar)-core and the rest (s_p,t_p)-cores.
CountTable q_bar_tuple_counts(int s_p, int t_p, int g, int W);

enum class Variant { straight, selfconj, bar };

/// t-cores of n that are not g-cores, restricted to self-conjugate
/// partitions or read as bar-cores according to the variant.
std::uint64_t not_g_core_count(int n, int t, int g, Variant variant);
CountTable not_g_core_counts(int t, int g, Variant variant, int N);

/// The finite sets for coprime s,t, grown one first row (diagonal hook,
/// largest part) at a time.
std::vector<Parts> all_st_cores(int s, int t);
std::vector<Parts> all_selfconj_st_cores(int s, int t);
std::vector<Parts> all_stbar_cores(int s, int t);

struct ExtremalStats {
    std::uint64_t total_count = 0;
    int max_size = 0;
};

/// Count and largest size of all (s,t)-cores by exhaustive growth.
ExtremalStats extremal_stats(int s, int t);

/// binom(s+t, s) / (s+t) and (s^2-1)(t^2-1)/24.
std::uint64_t st_core_count_formula(int s, int t);
std::uint64_t st_core_max_size_formula(int s, int t);

}  // namespace simcore::oracle
