#include <doctest.h>

#include "agp/normal_form.hpp"
#include "agp/oracle.hpp"

using namespace agp;

TEST_CASE("sandwiching the worked power") {
    Nat m = pow_nat(Nat(2), 65537);
    SandwichSeq s = sandwich(m, Nat(2));
    REQUIRE(s.steps.size() == 2);
    CHECK(s.steps[0].a == 1);
    CHECK(s.steps[0].b == 1);
    CHECK(s.steps[0].m == 65536);
    CHECK(s.steps[1].a == 0);
    CHECK(s.steps[1].b == 65537);
    CHECK(s.steps[1].m == m);
    CHECK(s.penum() == 65536);
}

TEST_CASE("small sandwiches") {
    SandwichSeq one = sandwich(Nat(1), Nat(2));
    REQUIRE(one.steps.size() == 1);
    CHECK(one.steps[0].a == 0);
    CHECK(one.steps[0].b == 0);
    CHECK(one.steps[0].m == 1);
    CHECK(one.penum() == 0);

    SandwichSeq s21 = sandwich(Nat(21), Nat(2));
    REQUIRE(s21.steps.size() == 2);
    CHECK(s21.steps[0].a == 1);
    CHECK(s21.steps[0].b == 0);
    CHECK(s21.steps[0].m == 4);
    CHECK(s21.steps[1].a == 0);
    CHECK(s21.steps[1].b == 4);
    CHECK(s21.steps[1].m == 16);

    CHECK_THROWS_AS(sandwich(Nat(0), Nat(2)), ZeroInput);
    CHECK_THROWS_AS(sandwich(Nat(5), Nat(1)), BaseTooSmall);
}

TEST_CASE("normal forms of the worked examples") {
    CHECK(print_term(normal_form(Nat(21), Nat(2))) == "A(0,A(A(0,0),0))+A(A(0,0),0)+A(0,0)");
    Nat m = pow_nat(Nat(2), 65537);
    CHECK(print_term(normal_form(m, Nat(2))) == "A(0,A(A(0,0),A(0,0))+A(0,0))");
    CHECK(normal_form(Nat(0), Nat(3)) == nullptr);
    // repeated blocks fold into coefficients
    CHECK(print_term(normal_form(Nat(8), Nat(2))) == "A(A(0,0),0)*2");
    CHECK(print_term(normal_form(Nat(19), Nat(3))) == "A(0,A(0,0)*2)*2+A(0,0)");
}

TEST_CASE("evaluation inverts construction") {
    CHECK(*eval_term(nullptr, Nat(2)) == 0);
    CHECK(*eval_term(parse_term("A(0,0)"), Nat(7)) == 1);
    for (unsigned m = 0; m <= 400; ++m)
        for (unsigned k = 2; k <= 4; ++k)
            CHECK(*eval_term(normal_form(Nat(m), Nat(k)), Nat(k)) == m);
    // the base-3 image of 2^16 + 1 is too large to materialize
    NFTerm big = base_change(normal_form(Nat(65537), Nat(2)), Nat(2), Nat(3));
    CHECK(!eval_term(big, Nat(3)).has_value());
    CHECK(*eval_term(normal_form(Nat(65537), Nat(2)), Nat(2)) == 65537);
}

TEST_CASE("validation") {
    for (unsigned m = 1; m <= 300; ++m) {
        CHECK(validate_nf(normal_form(Nat(m), Nat(2)), Nat(2)).verdict == Validity::Valid);
    }
    CHECK(validate_nf(parse_term("A(0,0)+A(0,0)"), Nat(2)).verdict == Validity::Invalid);
    CHECK(validate_nf(parse_term("A(A(0,0),0)"), Nat(2)).verdict == Validity::Valid);
    // a giant value reports Exceeded rather than guessing
    NFTerm big = base_change(normal_form(Nat(65537), Nat(2)), Nat(2), Nat(3));
    CHECK(validate_nf(big, Nat(3)).verdict == Validity::Exceeded);
}

TEST_CASE("head-block classification") {
    CHECK(classify(parse_term("A(0,0)"), Nat(2)) == NFClass::CaseA);
    CHECK(classify(parse_term("A(0,0)"), Nat(5)) == NFClass::CaseA);
    CHECK(classify(normal_form(Nat(16), Nat(2)), Nat(2)) == NFClass::CaseB);
    CHECK(classify(normal_form(Nat(2), Nat(2)), Nat(2)) == NFClass::CaseC);
    CHECK_THROWS_AS(classify(nullptr, Nat(2)), ZeroTerm);
}

TEST_CASE("base change") {
    NFTerm t = base_change(normal_form(Nat(65537), Nat(2)), Nat(2), Nat(3));
    CHECK(print_term(t) == "A(A(0,0),A(0,0))+A(0,0)");
    CHECK(base_change(nullptr, Nat(2), Nat(5)) == nullptr);
    NFTerm three = base_change(normal_form(Nat(3), Nat(2)), Nat(2), Nat(3));
    CHECK(*eval_term(three, Nat(3)) == 4);
    CHECK_THROWS_AS(base_change(one_term(), Nat(3), Nat(3)), BadBases);
    CHECK_THROWS_AS(base_change(one_term(), Nat(3), Nat(2)), BadBases);
}

TEST_CASE("sandwich agrees with the oracle on a quick sweep") {
    for (unsigned k = 2; k <= 4; ++k)
        for (unsigned m = 1; m <= 300; ++m) {
            SandwichSeq fast = sandwich(Nat(m), Nat(k));
            SandwichSeq slow = oracle::oracle_sandwich(Nat(m), Nat(k));
            REQUIRE(fast.steps.size() == slow.steps.size());
            for (size_t i = 0; i < fast.steps.size(); ++i) {
                CHECK(fast.steps[i].a == slow.steps[i].a);
                CHECK(fast.steps[i].b == slow.steps[i].b);
                CHECK(fast.steps[i].m == slow.steps[i].m);
            }
        }
}
