#include <doctest.h>

#include <random>

#include "agp/normal_form.hpp"
#include "agp/term.hpp"

using namespace agp;

TEST_CASE("parsing the basic shapes") {
    NFTerm t = parse_term("A(0,0)");
    REQUIRE(t);
    CHECK(is_zero(t->index));
    CHECK(is_zero(t->arg));
    CHECK(t->coeff == 1);
    CHECK(is_zero(t->rest));

    NFTerm u = parse_term("A(0,A(0,0))*2+A(0,0)");
    REQUIRE(u);
    CHECK(u->coeff == 2);
    REQUIRE(u->rest);
    CHECK(u->rest->coeff == 1);

    CHECK(is_zero(parse_term("0")));
    CHECK(term_eq(parse_term(" A( 0 , 0 ) * 3 "), parse_term("A(0,0)*3")));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_term("A(0;0)"), SyntaxError);
    CHECK_THROWS_AS(parse_term("A(0,0)+"), SyntaxError);
    CHECK_THROWS_AS(parse_term("B(0,0)"), SyntaxError);
    CHECK_THROWS_AS(parse_term("A(0,0)*0"), SyntaxError);
    CHECK_THROWS_AS(parse_term("A(0,0) junk"), SyntaxError);
    try {
        parse_term("A(0,0)+x");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("print and parse are inverse on generated terms") {
    std::mt19937_64 rng(7);
    std::function<NFTerm(int)> gen = [&](int depth) -> NFTerm {
        if (depth == 0 || rng() % 3 == 0) return nullptr;
        return make_block(gen(depth - 1), gen(depth - 1), Nat(1 + rng() % 4), gen(depth - 1));
    };
    for (int i = 0; i < 500; ++i) {
        NFTerm t = gen(4);
        CHECK(term_eq(parse_term(print_term(t)), t));
    }
}

TEST_CASE("canonical printing round trip on numbers") {
    for (unsigned m = 0; m <= 200; ++m) {
        NFTerm t = normal_form(Nat(m), Nat(2));
        std::string s = print_term(t);
        CHECK(print_term(parse_term(s)) == s);
    }
}

TEST_CASE("syntactic size") {
    CHECK(term_norm(nullptr) == 1);
    CHECK(term_norm(parse_term("A(0,0)")) == 3);
    CHECK(term_norm(parse_term("A(0,0)*2")) == 5);
    CHECK(term_norm(parse_term("A(A(0,0),0)")) == 5);
}

TEST_CASE("term order tracks the numeric order on normal forms") {
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned m = 0; m <= 120; ++m)
            for (unsigned n = 0; n <= 120; ++n) {
                Cmp c = nf_compare(normal_form(Nat(m), Nat(k)), normal_form(Nat(n), Nat(k)));
                Cmp want = m < n ? Cmp::LT : (m == n ? Cmp::EQ : Cmp::GT);
                REQUIRE(c == want);
            }
}
