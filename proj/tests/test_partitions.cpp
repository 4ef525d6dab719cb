#include <doctest.h>

#include "simcore/oracle.hpp"
#include "simcore/partition.hpp"

using namespace simcore;

TEST_CASE("canonical form") {
    const Partition p({1, 3, 0, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 1});
    CHECK(p.size() == 6);
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(to_string(Partition{5, 3, 3, 1}) == "(5,3,3,1)");
}

TEST_CASE("hook lengths") {
    CHECK(hook_length_multiset({4, 2, 1, 1}) == std::vector<int>{7, 4, 4, 2, 2, 1, 1, 1});
    CHECK(hook_length_multiset({1}) == std::vector<int>{1});
    CHECK(hook_length_multiset({}).empty());
}

TEST_CASE("first-column hooks") {
    CHECK(first_column_hooks({5, 3, 3, 3, 2, 2, 1, 1, 1}) == BetaSet{13, 10, 9, 8, 6, 5, 3, 2, 1});
    CHECK(first_column_hooks({}).size() == 0);
    CHECK(first_column_hooks({4, 2, 1, 1}) == BetaSet{7, 4, 2, 1});
    CHECK(from_first_column_hooks({13, 10, 9, 8, 6, 5, 3, 2, 1}) == Partition{5, 3, 3, 3, 2, 2, 1, 1, 1});
    CHECK(from_first_column_hooks({}) == Partition{});
    CHECK(from_first_column_hooks({9, 6, 4, 3, 1, 0}) == Partition{4, 2, 1, 1});
    CHECK(beta_set({4, 2, 1, 1}, 6) == BetaSet{9, 6, 4, 3, 1, 0});
    CHECK_THROWS(beta_set({4, 2, 1, 1}, 3));
}

TEST_CASE("conjugation and diagonal hooks") {
    CHECK(conjugate({4, 2, 1, 1}) == Partition{4, 2, 1, 1});
    CHECK(conjugate({3}) == Partition{1, 1, 1});
    CHECK(conjugate({5, 3, 1}) == Partition{3, 2, 2, 1, 1});
    CHECK(diagonal_hooks({3, 3, 3}) == std::vector<int>{5, 3, 1});
    CHECK(diagonal_hooks({4, 2, 1, 1}) == std::vector<int>{7, 1});
    CHECK(diagonal_hooks({1}) == std::vector<int>{1});
    const std::vector<int> d1{5, 3, 1};
    const std::vector<int> d2{7, 1};
    CHECK(from_diagonal_hooks(d1) == Partition{3, 3, 3});
    CHECK(from_diagonal_hooks(d2) == Partition{4, 2, 1, 1});
    CHECK(from_diagonal_hooks(std::vector<int>{}) == Partition{});
    CHECK_THROWS(from_diagonal_hooks(std::vector<int>{4}));
    CHECK_THROWS(from_diagonal_hooks(std::vector<int>{3, 3}));
}

TEST_CASE("t-cores") {
    CHECK(is_t_core({4, 2, 1, 1}, 3));
    CHECK(is_t_core({}, 5));
    CHECK_FALSE(is_t_core({2, 1}, 3));
}

TEST_CASE("agreement with the oracle up to 16") {
    for (int n = 0; n <= 16; ++n) {
        oracle::for_each_partition(n, [&](const oracle::Parts& raw) {
            const Partition p(raw);
            CHECK(hook_length_multiset(p) == oracle::hook_lengths(raw));
            CHECK(from_first_column_hooks(first_column_hooks(p)) == p);
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(is_self_conjugate(p) == oracle::is_self_conjugate(raw));
            for (int t = 1; t <= 6; ++t) {
                CHECK(is_t_core(p, t) == oracle::is_core(raw, t));
            }
            if (is_self_conjugate(p)) {
                const auto d = diagonal_hooks(p);
                CHECK(from_diagonal_hooks(d) == p);
            }
        });
    }
}
