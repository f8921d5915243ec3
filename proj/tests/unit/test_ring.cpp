#include <doctest.h>

#include "biamalg/hom.hpp"
#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

using namespace biamalg;

namespace {

RingPtr f2_xy_mod_squares() {
    // F2[x,y]/(x^2, y^2) built compositionally: F2[x]/(x^2) then [y]/(y^2)
    RingPtr fx = make_poly_quot(make_zmod(2), {0, 0, 1}, "x");
    return make_poly_quot(fx, {0, 0, fx->one()}, "y");
}

}  // namespace

TEST_CASE("Z/12 basics") {
    RingPtr R = make_zmod(12);
    CHECK(R->order() == 12);
    CHECK(R->zero() == 0);
    CHECK(R->one() == 1);
    CHECK(R->mul(4, 6) == 0);
    CHECK(R->pow(5, 2) == 1);
    CHECK(R->neg(5) == 7);
}

TEST_CASE("GF(4) is the field F2[t]/(t^2+t+1)") {
    RingPtr F4 = make_galois(2, 2);
    CHECK(F4->order() == 4);
    // t has code 2: digits (0,1); t*t = t+1 which has code 3
    CHECK(F4->mul(2, 2) == 3);
    RingInvariants inv = ring_invariants(*F4);
    CHECK(inv.is_field);
    CHECK(inv.is_local);
    CHECK(inv.jacobson.count() == 1);
    CHECK(inv.jacobson.test(0));
}

TEST_CASE("quotient Z/12 by span{6} has order 6 and Z/6 structure") {
    RingPtr Z12 = make_zmod(12);
    Ideal I = ideal_span(Z12, {6});
    CHECK(I.size() == 2);
    RingPtr Q = make_quotient(Z12, I.elems.to_codes());
    CHECK(Q->order() == 6);
    // additive order of 1 is 6
    code_t x = Q->one();
    int ord = 1;
    while (x != 0) {
        x = Q->add(x, Q->one());
        ++ord;
        REQUIRE(ord <= 7);
    }
    CHECK(ord == 6);
    // canonical isomorphism onto Z/6 exists
    RingHom h = hom_from_generator_images(Q, make_zmod(6), {});
    CHECK(h.is_injective());
    CHECK(h.is_surjective());
}

TEST_CASE("element classification") {
    RingPtr Z12 = make_zmod(12);
    ElementClass five = classify_element(*Z12, 5);
    CHECK(five.unit);
    CHECK(five.regular);
    CHECK(!five.zero_divisor);

    ElementClass six = classify_element(*Z12, 6);
    CHECK(six.zero_divisor);
    CHECK(six.nilpotent);  // 6^2 = 36 = 0 mod 12

    RingPtr F2x = make_poly_quot(make_zmod(2), {0, 0, 1}, "x");
    ElementClass xx = classify_element(*F2x, 2);  // the class of x
    CHECK(xx.zero_divisor);
    CHECK(xx.nilpotent);
    CHECK(!xx.regular);

    // 0 is a zero-divisor in any nonzero ring
    CHECK(classify_element(*Z12, 0).zero_divisor);
}

TEST_CASE("ring invariants of Z/12, Z/8, GF(4)") {
    RingPtr Z12 = make_zmod(12);
    RingInvariants inv = ring_invariants(*Z12);
    CHECK(inv.units.to_codes() == std::vector<code_t>{1, 5, 7, 11});
    CHECK(inv.nilradical.to_codes() == std::vector<code_t>{0, 6});
    CHECK(inv.jacobson.to_codes() == std::vector<code_t>{0, 6});
    CHECK(inv.idempotents.to_codes() == std::vector<code_t>{0, 1, 4, 9});
    CHECK(!inv.is_local);
    // Reg = units, two independent scans
    CHECK(inv.regulars == inv.units);

    RingPtr Z8 = make_zmod(8);
    RingInvariants inv8 = ring_invariants(*Z8);
    CHECK(inv8.is_local);
    REQUIRE(inv8.maximal_ideal.has_value());
    CHECK(inv8.maximal_ideal->to_codes() == std::vector<code_t>{0, 2, 4, 6});
}

TEST_CASE("multivariate quotient built compositionally") {
    RingPtr R = f2_xy_mod_squares();
    CHECK(R->order() == 16);
    // x = code 2, y = code 4, xy = code 8
    CHECK(R->mul(2, 4) == 8);
    CHECK(R->mul(2, 2) == 0);
    CHECK(R->mul(4, 4) == 0);
    CHECK(R->element_str(8) == "x*y");

    // kill xy: F2[x,y]/(x^2, xy, y^2) has order 8
    Ideal xy = ideal_span(R, {8});
    RingPtr Q = make_quotient(R, xy.elems.to_codes());
    CHECK(Q->order() == 8);
}

TEST_CASE("exhaustive axiom verification for assorted rings") {
    verify_ring_axioms(*make_zmod(12));
    verify_ring_axioms(*make_galois(2, 3));
    verify_ring_axioms(*make_galois(3, 2));
    verify_ring_axioms(*f2_xy_mod_squares());
    verify_ring_axioms(*make_product(make_zmod(4), make_zmod(6)));
    RingPtr Z12 = make_zmod(12);
    verify_ring_axioms(*make_quotient(Z12, ideal_span(Z12, {4}).elems.to_codes()));
}

TEST_CASE("cached tables agree with structural evaluation") {
    for (RingPtr R : {make_zmod(9), make_galois(2, 2),
                      make_poly_quot(make_zmod(4), {2, 0, 1}, "x"), f2_xy_mod_squares()}) {
        REQUIRE(R->has_tables());
        for (code_t a = 0; a < R->order(); ++a)
            for (code_t b = 0; b < R->order(); ++b) {
                CHECK(R->add(a, b) == R->add_structural(a, b));
                CHECK(R->mul(a, b) == R->mul_structural(a, b));
            }
    }
}

TEST_CASE("structural evaluation above the table cap") {
    RingConfig saved = ring_config();
    ring_config().table_cap = 8;
    RingPtr R = make_zmod(30);
    CHECK(!R->has_tables());
    CHECK(R->mul(7, 13) == 1);
    CHECK(R->add(29, 1) == 0);
    CHECK(R->is_unit(7));
    ring_config() = saved;
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_poly_quot(make_zmod(4), {1, 2}, "x"), RingError);  // non-monic
    RingConfig saved = ring_config();
    ring_config().max_order = 100;
    CHECK_THROWS_AS(make_zmod(101), RingError);
    CHECK_THROWS_AS(make_galois(2, 7), RingError);
    ring_config() = saved;
}

TEST_CASE("element arithmetic rejects mixed rings") {
    Element a{make_zmod(4), 1};
    Element b{make_zmod(6), 1};
    CHECK_THROWS_AS((void)(a + b), RingMismatch);
    Element c{a.ring, 3};
    CHECK((a + c).code == 0);
    CHECK((a * c).code == 3);
    CHECK((-c).code == 1);
}

TEST_CASE("quotient order formula |R/I| = |R| / |I|") {
    RingPtr Z12 = make_zmod(12);
    for (code_t g = 0; g < 12; ++g) {
        Ideal I = ideal_span(Z12, {g});
        RingPtr Q = make_quotient(Z12, I.elems.to_codes());
        CHECK(Q->order() * I.size() == 12);
    }
}

TEST_CASE("zero ring is permitted as a degenerate value") {
    RingPtr Z1 = make_zmod(1);
    CHECK(Z1->order() == 1);
    CHECK(Z1->one() == 0);
    CHECK(!Z1->is_zero_divisor(0));
}

TEST_CASE("an explicit quadratic quotient of Z/2 is the four-element field") {
    RingPtr F4 = make_poly_quot(make_zmod(2), {1, 1, 1}, "t");
    CHECK(F4->order() == 4);
    RingInvariants inv = ring_invariants(*F4);
    CHECK(inv.is_field);
    CHECK(F4->mul(2, 2) == 3);  // t*t = t+1
}
