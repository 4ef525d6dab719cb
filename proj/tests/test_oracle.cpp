#include <doctest.h>

#include <algorithm>

#include "simcore/oracle.hpp"

using namespace simcore::oracle;

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);

    std::vector<Parts> seen;
    for_each_partition(6, [&](const Parts& p) { seen.push_back(p); });
    CHECK(seen.size() == 11);
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    for (const auto& p : seen) {
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
    }

    int strict = 0;
    for_each_strict_partition(6, [&](const Parts&) { ++strict; });
    CHECK(strict == 4);
}

TEST_CASE("hook and bar lengths from the diagrams") {
    CHECK(hook_lengths({4, 2, 1, 1}) == std::vector<int>{7, 4, 4, 2, 2, 1, 1, 1});
    CHECK(hook_lengths({}).empty());
    CHECK(bar_lengths({5, 3, 1}) == std::vector<int>{8, 6, 5, 4, 3, 3, 1, 1, 1});
    CHECK(bar_lengths({2}) == std::vector<int>{2, 1});
    CHECK(is_core({4, 2, 1, 1}, 3));
    CHECK_FALSE(is_core({2, 1}, 3));
    CHECK(is_self_conjugate({3, 3, 3}));
    CHECK_FALSE(is_self_conjugate({3, 1}));
    CHECK(is_bar_core({4, 1}, 3));
    CHECK_FALSE(is_bar_core({6}, 3));
}

TEST_CASE("filtered counts") {
    CHECK(count_filtered(8, [](const Parts& p) { return is_self_conjugate(p) && is_core(p, 3); }) == 1);
    CHECK(count_filtered(12, [](const Parts&) { return true; }) == 77);
    CHECK(count_filtered_strict(5, [](const Parts& p) { return is_bar_core(p, 3); }) == 1);
    CHECK(find_partition(2, [](const Parts& p) { return is_self_conjugate(p); }) == std::nullopt);
}

TEST_CASE("tuple counts") {
    CHECK(q_tuple_count(2, 3, 4, 0) == 1);
    for (int g = 1; g <= 5; ++g) {
        CHECK(q_tuple_count(3, 3, g, 1) == g);
    }
    CHECK(q_tuple_count(2, 3, 2, 2) == 1);
    CHECK(q_bar_tuple_counts(3, 3, 7, 1).counts[1] == 4);
}

TEST_CASE("cores that are not g-cores") {
    CHECK(not_g_core_count(0, 16, 4, Variant::straight) == 0);
    for (int n = 4; n <= 24; ++n) {
        CHECK(not_g_core_count(n, 16, 4, Variant::straight) >= static_cast<std::uint64_t>(4 * (n / 4)));
    }
    for (int n = 7; n <= 24; ++n) {
        CHECK(not_g_core_count(n, 21, 7, Variant::bar) >= 4);
    }
    CHECK_THROWS_AS(not_g_core_count(5, 10, 5, Variant::bar), std::invalid_argument);
}

TEST_CASE("finite sets of simultaneous cores") {
    CHECK(extremal_stats(2, 3).total_count == 2);
    CHECK(extremal_stats(2, 3).max_size == 1);
    CHECK(extremal_stats(5, 7).total_count == 66);
    CHECK(extremal_stats(5, 7).max_size == 48);
    CHECK(st_core_count_formula(7, 11) == 1768);
    CHECK(st_core_max_size_formula(7, 11) == 240);
    CHECK(all_selfconj_st_cores(5, 7).size() == 10);
    CHECK(all_stbar_cores(5, 7).size() == 10);
    CHECK(all_selfconj_st_cores(7, 11).size() == 56);
    CHECK(all_stbar_cores(7, 11).size() == 56);
    CHECK_THROWS_AS(extremal_stats(4, 6), std::invalid_argument);

    const auto cores = all_st_cores(5, 7);
    const auto table = st_core_counts(5, 7, 48);
    for (int n = 0; n <= 48; ++n) {
        const auto here = std::count_if(cores.begin(), cores.end(), [&](const Parts& p) {
            int size = 0;
            for (int x : p) size += x;
            return size == n;
        });
        CHECK(table.counts[static_cast<std::size_t>(n)] == here);
    }
}

TEST_CASE("count table output") {
    const auto table = core_counts(2, 3);
    CHECK(table.to_csv() == "n,count\n0,1\n1,1\n2,0\n3,1\n");
    CHECK(table.to_json().find("\"rows\"") != std::string::npos);
}
