#include <doctest.h>

#include "agp/expansion.hpp"

using namespace agp;

namespace {
NFTerm nf2(unsigned long m) { return normal_form(Nat(m), Nat(2)); }
}  // namespace

TEST_CASE("right expansion preserves values") {
    // A_1(1) at base 2: two applications reach 4, the full four reach 65536
    NFTerm t = nf2(65536);  // single block A_1(1)
    REQUIRE(is_single_block(t));
    NFTerm half = right_expand(t, Nat(2), Nat(2), Nat(2));
    CHECK(*eval_term(half, Nat(2)) == 4);
    NFTerm full = right_expand(t, Nat(2), Nat(4), Nat(2));
    CHECK(*eval_term(full, Nat(2)) == 65536);
    NFTerm full1 = right_expand(t, Nat(1), Nat(2), Nat(2));
    CHECK(*eval_term(full1, Nat(2)) == 65536);
}

TEST_CASE("right expansion at base 3") {
    NFTerm a10 = make_block(one_term(), nullptr);  // A_1(0)
    NFTerm r = right_expand(a10, Nat(1), Nat(3), Nat(3));
    CHECK(*eval_term(r, Nat(3)) == Nat("7625597484987"));
    CHECK(term_eq(r, wrap_blocks(nullptr, Nat(3), one_term())));
}

TEST_CASE("right expansion keeps the shape at level 2") {
    // A_2(1) = A_1(A_1(A_2(0))) at base 2; with two applications the term is
    // A_1(A_1(A_2(0)))-shaped
    NFTerm a21 = make_block(nf2(2), one_term());
    NFTerm r = right_expand(a21, Nat(1), Nat(2), Nat(2));
    NFTerm expect = wrap_blocks(one_term(), Nat(2), make_block(nf2(2), nullptr));
    CHECK(term_eq(r, expect));
}

TEST_CASE("right expansion guard") {
    // the full expansion reaches the original value, so normality must be refused
    NFTerm t = nf2(65536);
    CHECK_THROWS_AS(right_expand(t, Nat(1), Nat(2), Nat(2), true), GuardViolated);
    CHECK_THROWS_AS(right_expand(t, Nat(3), Nat(1), Nat(2)), NotApplicable);  // s > b+1
    CHECK_THROWS_AS(right_expand(nf2(3), Nat(1), Nat(1), Nat(2)), NotApplicable);
}

TEST_CASE("left expansion of the small landmarks") {
    {
        LeftExpansion le = left_expansion(nf2(4), Nat(2));  // A_1(0)
        REQUIRE(le.complete);
        REQUIRE(le.c.size() == 2);
        CHECK(term_eq(le.c[0], one_term()));
        CHECK(*eval_term(le.c[1], Nat(2)) == 2);
        CHECK(print_term(le.c[1]) == "A(0,A(0,0))");
    }
    {
        NFTerm a10 = make_block(one_term(), nullptr);
        LeftExpansion le = left_expansion(a10, Nat(3));
        REQUIRE(le.complete);
        REQUIRE(le.c.size() == 2);
        CHECK(term_eq(le.c[0], one_term()));
        CHECK(*eval_term(le.c[1], Nat(3)) == pow_nat(Nat(3), 26));
        CHECK(term_eq(le.c[1], make_block(nullptr, normal_form(Nat(26), Nat(3)))));
    }
}

TEST_CASE("left expansion halts honestly at level 2") {
    NFTerm a20 = make_block(nf2(2), nullptr);
    LeftExpansion le = left_expansion(a20, Nat(2));
    CHECK(!le.complete);
    REQUIRE(le.c.size() == 2);
    CHECK(term_eq(le.c[0], one_term()));
    CHECK(term_eq(le.c[1], make_block(one_term(), nf2(65535))));
    CHECK_THROWS_AS(left_expansion(one_term(), Nat(2)), NotApplicable);
    CHECK_THROWS_AS(left_expansion(nf2(3), Nat(2)), NotApplicable);
}

TEST_CASE("predecessor landmarks") {
    auto p4 = predecessor(nf2(4), Nat(2));
    REQUIRE(p4.has_value());
    CHECK(print_term(*p4) == "A(0,A(0,0))+A(0,0)");
    CHECK(*eval_term(*p4, Nat(2)) == 3);

    auto p1 = predecessor(one_term(), Nat(5));
    REQUIRE(p1.has_value());
    CHECK(*p1 == nullptr);

    NFTerm a10 = make_block(one_term(), nullptr);
    auto p = predecessor(a10, Nat(3));
    REQUIRE(p.has_value());
    CHECK(*eval_term(*p, Nat(3)) == Nat("7625597484986"));
    // head is A_0(26) repeated twice
    CHECK((*p)->coeff == 2);
    CHECK(term_eq((*p)->arg, normal_form(Nat(26), Nat(3))));

    CHECK_THROWS_AS(predecessor(nullptr, Nat(2)), ZeroTerm);
}

TEST_CASE("predecessor sweeps the small range") {
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned m = 2; m <= 400; ++m) {
            auto p = predecessor(normal_form(Nat(m), Nat(k)), Nat(k));
            REQUIRE(p.has_value());
            CHECK(*eval_term(*p, Nat(k)) == m - 1);
        }
}

TEST_CASE("level-2 predecessor refuses honestly") {
    NFTerm a20 = make_block(nf2(2), nullptr);
    CHECK(!predecessor(a20, Nat(2)).has_value());
}
