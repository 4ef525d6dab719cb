#include <doctest.h>

#include <set>

#include "simcore/encodings.hpp"
#include "simcore/oracle.hpp"

using namespace simcore;

TEST_CASE("core tuples") {
    CHECK(gks_encode({4, 2, 1, 1}, 3).entries() == std::vector<int>{2, 0, -2});
    CHECK(gks_encode({}, 4).entries() == std::vector<int>{0, 0, 0, 0});
    CHECK(gks_encode({3, 1, 1}, 3).entries() == std::vector<int>{-1, 0, 1});
    CHECK(gks_decode(CoreTuple(3, {2, 0, -2})) == Partition{4, 2, 1, 1});
    CHECK(gks_decode(CoreTuple(5, {0, 0, 0, 0, 0})) == Partition{});
    CHECK(gks_decode(CoreTuple(3, {-1, 0, 1})) == Partition{3, 1, 1});
    CHECK_THROWS_AS(CoreTuple(3, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gks_encode({2, 1}, 3), std::invalid_argument);
}

TEST_CASE("self-conjugate tuples and diagonal hooks") {
    CHECK(is_selfconjugate_tuple(CoreTuple(3, {2, 0, -2})));
    CHECK(is_selfconjugate_tuple(CoreTuple(5, {0, 0, 0, 0, 0})));
    CHECK(diagonal_hooks_from_tuple(CoreTuple(3, {2, 0, -2})) == std::vector<int>{7, 1});
    CHECK(diagonal_hooks_from_tuple(CoreTuple(3, {0, 0, 0})).empty());
    CHECK(diagonal_hooks_from_tuple(CoreTuple(3, {-1, 0, 1})) == std::vector<int>{5});
}

TEST_CASE("bar tuples") {
    CHECK(olsson_encode({4, 1}, 3).entries() == std::vector<int>{2});
    CHECK(olsson_encode({}, 5).entries() == std::vector<int>{0, 0});
    CHECK(olsson_encode({5, 2}, 3).entries() == std::vector<int>{-2});
    CHECK(olsson_decode(BarTuple(3, {2})) == BarPartition{4, 1});
    CHECK(olsson_decode(BarTuple(3, {0})) == BarPartition{});
    CHECK(olsson_decode(BarTuple(3, {-2})) == BarPartition{5, 2});
}

TEST_CASE("zeta") {
    CHECK(zeta({4, 2, 1, 1}, 3) == BarPartition{4, 1});
    CHECK(zeta({}, 5) == BarPartition{});
    CHECK(zeta({3, 1, 1}, 3) == BarPartition{2});
    CHECK(zeta_inverse({4, 1}, 3) == Partition{4, 2, 1, 1});
    CHECK_THROWS_AS(zeta({2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(zeta({4, 2, 1, 1}, 4), std::invalid_argument);
}

TEST_CASE("encodings against the oracle") {
    for (int t : {3, 5, 7}) {
        std::set<BarPartition> images;
        for (int n = 0; n <= 22; ++n) {
            oracle::for_each_partition(n, [&](const oracle::Parts& raw) {
                if (!oracle::is_core(raw, t)) return;
                const Partition p(raw);
                const auto c = gks_encode(p, t);
                CHECK(gks_decode(c) == p);
                CHECK(is_selfconjugate_tuple(c) == oracle::is_self_conjugate(raw));
                if (oracle::is_self_conjugate(raw)) {
                    CHECK(diagonal_hooks_from_tuple(c) == diagonal_hooks(p));
                    const auto b = zeta(p, t);
                    CHECK(oracle::is_bar_core(b.parts(), t));
                    CHECK(zeta_inverse(b, t) == p);
                    CHECK(images.insert(b).second);
                }
            });
        }
        for (int n = 0; n <= 22; ++n) {
            oracle::for_each_strict_partition(n, [&](const oracle::Parts& raw) {
                if (!oracle::is_bar_core(raw, t)) return;
                const BarPartition b(raw);
                CHECK(olsson_decode(olsson_encode(b, t)) == b);
            });
        }
    }
}
