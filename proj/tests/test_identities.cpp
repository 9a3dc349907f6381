#include <doctest.h>

#include "combperm/identities.hpp"

using namespace combperm;

namespace {

std::vector<BigInt> seq(const RecurrenceSpec& spec, long N) { return eval_sequence(spec, N).values; }

}  // namespace

TEST_CASE("hand-checked identity values at m=1") {
    const auto c = seq(RecurrenceSpec{{1, 1}, {3, 1}}, 12);
    const auto p = seq(RecurrenceSpec{{2, 1}, {3, 1}}, 12);
    const auto P1 = perm_table(OffsetSet{-2, -1, 1}, 12);  // Padovan
    const auto P2 = perm_table(OffsetSet{-2, 0, 1}, 12);   // Narayana's cows

    auto gen1 = make_gen1_eval(c, P1, 1);
    CHECK(gen1(3) == std::pair<BigInt, BigInt>{4, 4});
    CHECK(gen1(0) == std::pair<BigInt, BigInt>{1, 1});

    auto sum = make_sum_eval(c, P1, 1);
    CHECK(sum(0) == std::pair<BigInt, BigInt>{3, 3});  // c_3^2 - 1 = 3

    auto block = make_block_eval(c, P1, 1, 1);
    CHECK(block(1) == std::pair<BigInt, BigInt>{9, 9});  // c_4^2 = 9
    auto block0 = make_block_eval(c, P1, 1, 0);
    CHECK(block0(0) == std::pair<BigInt, BigInt>{1, 1});

    auto mixed = make_mixed_eval(c, P1, 1);
    CHECK(mixed(3) == std::pair<BigInt, BigInt>{4, 4});

    auto gen2 = make_gen2_eval(p, P2, 1);
    CHECK(gen2(5) == std::pair<BigInt, BigInt>{4, 4});  // p_5^2 = 4
    CHECK(gen2(0) == std::pair<BigInt, BigInt>{1, 1});

    auto mixed2 = make_mixed2_eval(p, P2, 1);
    CHECK(mixed2(5) == std::pair<BigInt, BigInt>{4, 4});
}

TEST_CASE("general identities verify over their ranges") {
    for (long m = 0; m <= 3; ++m) {
        CHECK(verify_identity_gen1(m, 18).verified);
        CHECK(verify_identity_sum(m, 18).verified);
        CHECK(verify_identity_mixed(m, 18).verified);
        for (long j = 0; j <= m + 1; ++j) CHECK(verify_identity_block(m, j, 12).verified);
        if (m >= 1) {
            CHECK(verify_identity_gen2(m, 18).verified);
            CHECK(verify_identity_mixed2(m, 18).verified);
        }
    }
    CHECK_THROWS_AS(verify_identity_gen2(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity_block(1, 3, 5), std::invalid_argument);
}

TEST_CASE("m=0 reduces to the fibonacci case") {
    // s^{(1,2)} = F_{n+1} and P == 1; the identities must still verify.
    auto r = verify_identity_gen1(0, 12);
    CHECK(r.verified);
    const auto P = perm_table(OffsetSet{-2, -1, 0}, 12);
    for (const auto& v : P) CHECK(v == 1);
}

TEST_CASE("a perturbed recurrence is caught at the first affected index") {
    // v_1 bumped from 1 to 2 in s^{(1,3)}; gen1 must fail at n = m_1 = 1.
    const auto bad = seq(RecurrenceSpec{{1, 2}, {3, 1}}, 12);
    const auto P1 = perm_table(OffsetSet{-2, -1, 1}, 12);
    auto r = run_check("gen1-perturbed", {{"m", 1}}, 0, 12, make_gen1_eval(bad, P1, 1));
    CHECK(!r.verified);
    CHECK(r.fail_n == 1);
    CHECK(r.lhs == 4);  // (2)^2
    CHECK(r.rhs == 1);
    CHECK(r.describe().find("FAILED") != std::string::npos);
}

TEST_CASE("a perturbed permanent table is caught") {
    const auto c = seq(RecurrenceSpec{{1, 1}, {3, 1}}, 12);
    auto P1 = perm_table(OffsetSet{-2, -1, 1}, 12);
    P1[4] += 1;
    auto r = run_check("sum-perturbed", {}, 0, 10, make_sum_eval(c, P1, 1));
    CHECK(!r.verified);
}

TEST_CASE("narayana/padovan specializations") {
    const auto reports = verify_narayana_padovan(25);
    CHECK(reports.size() == 8);  // c3n+j expands to three reports
    for (const auto& r : reports) CHECK(r.verified);
}

TEST_CASE("specializations coincide with the general forms at m=1") {
    const long N = 20;
    const auto c = seq(RecurrenceSpec{{1, 1}, {3, 1}}, 3 * N + 3);
    const auto p = seq(RecurrenceSpec{{2, 1}, {3, 1}}, 3 * N + 3);
    const auto P1 = perm_table(OffsetSet{-2, -1, 1}, 3 * N + 3);
    const auto P2 = perm_table(OffsetSet{-2, 0, 1}, 3 * N + 3);

    std::vector<Evaluator> general;
    general.push_back(make_gen1_eval(c, P1, 1));
    general.push_back(make_gen2_eval(p, P2, 1));
    general.push_back(make_sum_eval(c, P1, 1));
    for (long j = 0; j <= 2; ++j) general.push_back(make_block_eval(c, P1, 1, j));
    general.push_back(make_mixed_eval(c, P1, 1));
    general.push_back(make_mixed2_eval(p, P2, 1));

    const auto standalone = narayana_padovan_evaluators(N);
    REQUIRE(standalone.size() == general.size());
    for (std::size_t i = 0; i < standalone.size(); ++i)
        for (long n = 0; n <= N; ++n) CHECK(standalone[i].eval(n) == general[i](n));
}

TEST_CASE("theorem2 and corollary3 verifiers") {
    const std::vector<RecurrenceSpec> specs{RecurrenceSpec{{1, 1}, {2, 1}}, RecurrenceSpec{{1, 1}, {3, 1}},
                                            RecurrenceSpec{{2, 1}, {3, 1}}, RecurrenceSpec{{1, 2}, {2, 1}}};
    for (const auto& spec : specs) {
        CHECK(verify_theorem2(spec, 2, 5).verified);
        CHECK(verify_corollary3(spec, 2, 8).verified);
    }
    CHECK(verify_corollary3(specs[0], 3, 6).verified);
    CHECK(verify_theorem2(specs[0], 3, 3).verified);
}

TEST_CASE("mu verifier") {
    for (const auto& r : verify_mu_theorems(2, 10)) CHECK(r.verified);
}
