#include <doctest.h>

#include "agp/ackermann.hpp"
#include "agp/oracle.hpp"

using namespace agp;

TEST_CASE("level 0 is plain exponentiation") {
    CHECK(*ack_eval(Nat(0), Nat(2), Nat(0)) == 1);
    CHECK(*ack_eval(Nat(0), Nat(2), Nat(10)) == 1024);
    CHECK(*ack_eval(Nat(0), Nat(7), Nat(0)) == 1);  // k^0 = 1 at every base
    CHECK(*ack_eval(Nat(0), Nat(3), Nat(4)) == 81);
}

TEST_CASE("the -1 argument evaluates to 1") {
    CHECK(*ack_eval(Nat(0), Nat(2), ArgOrMinusOne::minus_one()) == 1);
    CHECK(*ack_eval(Nat(5), Nat(3), ArgOrMinusOne::minus_one()) == 1);
}

TEST_CASE("level 1 landmarks") {
    CHECK(*ack_eval(Nat(1), Nat(2), Nat(0)) == 4);
    CHECK(*ack_eval(Nat(1), Nat(2), Nat(1)) == 65536);
    CHECK(*ack_eval(Nat(1), Nat(3), Nat(0)) == Nat("7625597484987"));
}

TEST_CASE("level 2 at base 3 exceeds a million-digit budget") {
    EvalBudget b;
    b.max_digits = 1000000;
    CHECK(!ack_eval(Nat(2), Nat(3), Nat(0), b).has_value());
}

TEST_CASE("base below 2 is rejected") {
    CHECK_THROWS_AS(ack_eval(Nat(0), Nat(1), Nat(0)), BaseTooSmall);
    CHECK_THROWS_AS(ack_cmp_threshold(Nat(0), Nat(0), Nat(0), Nat(5)), BaseTooSmall);
}

TEST_CASE("threshold comparison") {
    CHECK(!ack_cmp_threshold(Nat(2), Nat(3), Nat(0), Nat(1000000)).has_value());
    auto r = ack_cmp_threshold(Nat(0), Nat(2), Nat(4), Nat(16));
    REQUIRE(r.has_value());
    CHECK(*r == 16);
    // pruned without recursion: the argument already dominates the threshold
    CHECK(!ack_cmp_threshold(Nat(5), Nat(2), Nat(1000000000), Nat(1000000000)).has_value());
}

TEST_CASE("iterated application") {
    EvalBudget tight;  // defaults
    CHECK(!ack_iter(Nat(0), Nat(3), Nat(1), Nat(6), tight).has_value());
    CHECK(*ack_iter(Nat(0), Nat(2), Nat(1), Nat(2)) == 4);
    CHECK(*ack_iter(Nat(1), Nat(2), Nat(0), Nat(1)) == 4);
    CHECK(*ack_iter(Nat(1), Nat(2), Nat(7), Nat(0)) == 7);  // zero-fold
    CHECK_THROWS_AS(ack_iter(Nat(1), Nat(2), ArgOrMinusOne::minus_one(), Nat(0)),
                    IterZeroOnSentinel);
}

TEST_CASE("memoization is invisible") {
    ack_cache_clear();
    auto cold = ack_eval(Nat(1), Nat(2), Nat(1));
    auto warm = ack_eval(Nat(1), Nat(2), Nat(1));
    CHECK(*cold == *warm);
    ack_cache_clear();
    CHECK(*ack_eval(Nat(1), Nat(2), Nat(1)) == *cold);
}

TEST_CASE("agrees with the definitional evaluator on a small sweep") {
    Nat cap = pow10(500) - 1;
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 4; ++b)
            for (unsigned k = 2; k <= 3; ++k) {
                EvalBudget budget;
                budget.max_digits = 500;
                auto fast = ack_eval(Nat(a), Nat(k), Nat(b), budget);
                auto slow = oracle::naive_ack(Nat(a), Nat(k), Nat(b), cap);
                if (fast && slow) CHECK(*fast == *slow);
            }
}
