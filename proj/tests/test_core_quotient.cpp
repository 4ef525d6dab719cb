#include <doctest.h>

#include "simcore/core_quotient.hpp"
#include "simcore/oracle.hpp"

using namespace simcore;

namespace {

const Partition kLambda{21, 20, 12, 12, 12, 12, 11, 11, 10, 9, 8, 6, 2, 2, 2, 2, 2, 2, 2, 2, 1};
const BarPartition kLambdaBar{20, 19, 18, 10, 8, 7, 4};

int hooks_divisible(const Partition& p, int m) {
    int c = 0;
    for (int h : hook_length_multiset(p)) c += h % m == 0;
    return c;
}

}  // namespace

TEST_CASE("straight tower of the (21,33) example") {
    const auto tower = decompose(kLambda, 3);
    CHECK(kLambda.size() == 161);
    CHECK(tower.core == Partition{4, 2, 1, 1});
    REQUIRE(tower.quotient.size() == 3);
    CHECK(tower.quotient[0] == Partition{5, 3, 3, 3, 2, 2, 1, 1, 1});
    CHECK(tower.quotient[1] == Partition{3, 3, 3});
    CHECK(tower.quotient[2] == Partition{9, 6, 4, 1, 1});
    CHECK(tower.weight == 51);
    CHECK(reconstruct(tower) == kLambda);
    CHECK(selfconjugate_tower_check(tower));
    const auto [in_p, in_q] = hook_bijection_check(kLambda, 3, 1);
    CHECK(in_p == in_q);
    CHECK(is_st_core(kLambda, 21, 33));
    CHECK(is_st_core_via_quotient(kLambda, 21, 33));
}

TEST_CASE("small towers") {
    const auto t21 = decompose({2, 1}, 3);
    CHECK(t21.core.empty());
    CHECK(t21.weight == 1);
    CHECK(hook_bijection_check({2, 1}, 3, 1) == std::pair{1, 1});
    CHECK(hook_bijection_check({4, 2, 1, 1}, 3, 2) == std::pair{0, 0});

    const auto core = decompose({4, 2, 1, 1}, 3);
    CHECK(core.core == Partition{4, 2, 1, 1});
    CHECK(core.weight == 0);

    const StraightTower one{3, Partition{}, {Partition{1}, Partition{}, Partition{}}, 1};
    const auto p = reconstruct(one);
    CHECK(p.size() == 3);
    CHECK(hooks_divisible(p, 3) == 1);
    CHECK_FALSE(selfconjugate_tower_check(one));
    CHECK(selfconjugate_tower_check({3, Partition{4, 2, 1, 1}, {Partition{}, Partition{}, Partition{}}, 0}));
    CHECK_THROWS_AS(decompose({3, 1}, 1), std::invalid_argument);
}

TEST_CASE("bar tower of the (21,33) example") {
    const auto tower = bar_decompose(kLambdaBar, 3);
    CHECK(kLambdaBar.size() == 86);
    CHECK(tower.core == BarPartition{4, 1});
    CHECK(tower.bar_component == BarPartition{6});
    REQUIRE(tower.quotient.size() == 1);
    CHECK(tower.quotient[0] == Partition{5, 3, 3, 3, 2, 2, 1, 1, 1});
    CHECK(tower.weight == 27);
    CHECK(bar_reconstruct(tower) == kLambdaBar);
    const auto [in_b, in_q] = bar_bijection_check(kLambdaBar, 3, 1);
    CHECK(in_b == in_q);
    CHECK(is_stbar_core(kLambdaBar, 21, 33));
    CHECK(is_stbar_core_via_quotient(kLambdaBar, 21, 33));
}

TEST_CASE("small bar towers") {
    const auto t3 = bar_decompose({3}, 3);
    CHECK(t3.core.empty());
    CHECK(t3.bar_component == BarPartition{1});
    CHECK(t3.weight == 1);
    CHECK(bar_reconstruct({3, BarPartition{}, BarPartition{1}, {Partition{}}, 1}) == BarPartition{3});
    CHECK(bar_bijection_check({3}, 3, 1) == std::pair{1, 1});
    CHECK(bar_bijection_check({4, 1}, 3, 1) == std::pair{0, 0});
    CHECK(is_stbar_core({6}, 7, 11));
    CHECK(is_stbar_core({}, 7, 11));
    CHECK_THROWS_AS(bar_decompose({3}, 4), std::invalid_argument);
}

TEST_CASE("towers against the oracle") {
    for (int n = 0; n <= 18; ++n) {
        oracle::for_each_partition(n, [&](const oracle::Parts& raw) {
            const Partition p(raw);
            for (int g = 2; g <= 5; ++g) {
                const auto tower = decompose(p, g);
                CHECK(reconstruct(tower) == p);
                CHECK(oracle::is_core(tower.core.parts(), g));
                CHECK(tower.core.size() + g * tower.weight == n);
                CHECK(selfconjugate_tower_check(tower) == oracle::is_self_conjugate(raw));
                CHECK(decompose(p, g).quotient == tower.quotient);
            }
            CHECK(is_st_core(p, 4, 6) == (oracle::is_core(raw, 4) && oracle::is_core(raw, 6)));
            CHECK(is_st_core_via_quotient(p, 4, 6) == is_st_core(p, 4, 6));
            CHECK(is_st_core_via_quotient(p, 6, 9) == is_st_core(p, 6, 9));
        });
        oracle::for_each_strict_partition(n, [&](const oracle::Parts& raw) {
            const BarPartition b(raw);
            for (int g = 3; g <= 7; g += 2) {
                const auto tower = bar_decompose(b, g);
                CHECK(bar_reconstruct(tower) == b);
                CHECK(oracle::is_bar_core(tower.core.parts(), g));
                CHECK(tower.core.size() + g * tower.weight == n);
            }
            CHECK(is_stbar_core_via_quotient(b, 9, 15) == (oracle::is_bar_core(raw, 9) && oracle::is_bar_core(raw, 15)));
        });
    }
}
