#include <doctest.h>

#include "combperm/identities.hpp"
#include "combperm/permanents.hpp"

using namespace combperm;

TEST_CASE("P_n^{-2,-1,0} is identically 1") {
    const OffsetSet W{-2, -1, 0};
    for (long n = 0; n <= 20; ++n) CHECK(count_restricted_perms(n, W) == 1);
}

TEST_CASE("small {-2,-1,2} values") {
    const OffsetSet W{-2, -1, 2};
    CHECK(count_restricted_perms(3, W) == 1);  // only (3,1,2)
    CHECK(count_restricted_perms(2, W) == 0);
    CHECK(count_restricted_perms(0, W) == 1);
}

TEST_CASE("ryser on simple matrices") {
    for (int n : {1, 3, 6, 12}) {
        ZeroOneMatrix id(n);
        for (int i = 0; i < n; ++i) id.at(i, i) = 1;
        CHECK(permanent_ryser(id) == 1);
    }
    ZeroOneMatrix ones(3);
    for (auto& e : ones.entries) e = 1;
    CHECK(permanent_ryser(ones) == 6);
    CHECK(permanent_ryser(ZeroOneMatrix(0)) == 1);
    CHECK_THROWS_AS(permanent_ryser(ZeroOneMatrix(13)), std::invalid_argument);
}

TEST_CASE("toeplitz construction") {
    const auto id = toeplitz_from_W(3, OffsetSet{0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id.at(i, j) == (i == j ? 1 : 0));

    const auto m = toeplitz_from_W(4, OffsetSet{-2, -1, 2});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const int d = j - i;
            CHECK(m.at(i, j) == ((d == -2 || d == -1 || d == 2) ? 1 : 0));
        }

    // Tridiagonal all-ones band: the classic Fibonacci permanent.
    CHECK(permanent_ryser(toeplitz_from_W(5, OffsetSet{-1, 0, 1})) == 8);
}

TEST_CASE("dp agrees with ryser across a window of sets") {
    const std::vector<int> universe{-3, -2, -1, 0, 1, 2, 3};
    for (unsigned bits = 1; bits < (1u << universe.size()); ++bits) {
        if (__builtin_popcount(bits) > 4) continue;
        std::vector<int> xs;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (bits & (1u << i)) xs.push_back(universe[i]);
        const OffsetSet W(xs);
        for (long n = 1; n <= 6; ++n)
            CHECK(count_restricted_perms(n, W) == permanent_ryser(toeplitz_from_W(static_cast<int>(n), W)));
    }
}

TEST_CASE("theorem1 recurrences") {
    // {-1,1,2} gives the Padovan numbers, {-1,0,2} the Narayana's cows numbers.
    const auto pad = theorem1_sequence(OffsetSet{-1, 1, 2}, 10);
    CHECK(pad.values == eval_sequence(RecurrenceSpec{{2, 1}, {3, 1}}, 10).values);
    const auto cows = theorem1_sequence(OffsetSet{-1, 0, 2}, 10);
    CHECK(cows.values == eval_sequence(RecurrenceSpec{{1, 1}, {3, 1}}, 10).values);
    CHECK(theorem1_sequence(OffsetSet{-1, 0, 3}, 0).at(0) == 1);

    for (const OffsetSet& W : {OffsetSet{-1, 1, 2}, OffsetSet{-1, 0, 2}, OffsetSet{-1, 2, 3}}) {
        const auto t = theorem1_sequence(W, 16);
        for (long n = 0; n <= 16; ++n) CHECK(t.at(n) == count_restricted_perms(n, W));
    }

    CHECK_THROWS_AS(theorem1_sequence(OffsetSet{-2, -1, 1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_sequence(OffsetSet{-1, 0}, 5), std::invalid_argument);  // d_r = 0
    CHECK_THROWS_AS(theorem1_sequence(OffsetSet{-1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_sequence(OffsetSet{0, 1}, 5), std::invalid_argument);
}

TEST_CASE("W = {-1,0} forces the identity permutation") {
    const OffsetSet W{-1, 0};
    for (long n = 0; n <= 12; ++n) CHECK(count_restricted_perms(n, W) == 1);
}

TEST_CASE("mirror") {
    CHECK(mirror(OffsetSet{-2, -1, 1}).offsets == std::vector<int>{-1, 1, 2});
    CHECK(mirror(OffsetSet{0}).offsets == std::vector<int>{0});
    for (const OffsetSet& W : {OffsetSet{-2, 0, 1}, OffsetSet{-2, -1, 2}, OffsetSet{-3, 1, 2}}) {
        const auto M = mirror(W);
        for (long n = 0; n <= 12; ++n)
            CHECK(count_restricted_perms(n, W) == count_restricted_perms(n, M));
    }
}

TEST_CASE("a080013 matches the direct count") {
    const auto t = a080013_sequence(20);
    CHECK(t.at(0) == 1);
    CHECK(t.at(1) == 0);
    CHECK(t.at(2) == 0);
    CHECK(t.at(3) == 1);
    CHECK(t.at(7) == 3);
    const OffsetSet W{-2, -1, 2};
    for (long n = 0; n <= 20; ++n) CHECK(t.at(n) == count_restricted_perms(n, W));
}

TEST_CASE("degenerate and guarded inputs") {
    CHECK(count_restricted_perms(0, OffsetSet{5}) == 1);
    CHECK(count_restricted_perms(3, OffsetSet{1}) == 0);   // value 1 unreachable
    CHECK(count_restricted_perms(3, OffsetSet{-1}) == 0);  // position 1 has no image
    CHECK(count_restricted_perms(4, OffsetSet{-1, 1}) == 1);
    CHECK(count_restricted_perms(5, OffsetSet{-1, 1}) == 0);
    CHECK_THROWS_AS(count_restricted_perms(3, OffsetSet{-9, 0, 30}), std::invalid_argument);
    CHECK_THROWS_AS(OffsetSet(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("P_0 = 1 and non-negativity for assorted sets") {
    for (const OffsetSet& W : {OffsetSet{-2, -1, 3}, OffsetSet{-3, 2}, OffsetSet{0}, OffsetSet{-1, 4}}) {
        CHECK(count_restricted_perms(0, W) == 1);
        for (long n = 0; n <= 10; ++n) CHECK(count_restricted_perms(n, W) >= 0);
    }
}
