#include <doctest.h>

#include "biamalg/biamalg.hpp"

using namespace biamalg;

namespace {

// A = Z/8, B = C = Z/4, f = g = canonical, b = c = (2): the order-8 local
// instance used throughout.
BiAmalg chain_instance() {
    RingPtr A = make_zmod(8);
    RingPtr B = make_zmod(4);
    RingHom f = hom_canonical(A, B);
    Ideal b = ideal_span(B, {2});
    return biamalg_new(f, f, b, b);
}

}  // namespace

TEST_CASE("construction: duplication of Z/6 along (2) has order 18") {
    RingPtr A = make_zmod(6);
    BiAmalg inst = duplication_instance(A, ideal_span(A, {2}));
    CHECK(inst.order() == 18);  // |A/i0| * |b| * |c| = 2*3*3
    CHECK(inst.i0.elems == ideal_span(A, {2}).elems);
    CHECK(inst.k.size() == 1);
}

TEST_CASE("construction: chain instance has order 8") {
    BiAmalg inst = chain_instance();
    CHECK(inst.order() == 8);  // 2*2*2
    CHECK(inst.A_mod_i0->order() == 2);
}

TEST_CASE("construction: incompatible ideals rejected with witness") {
    RingPtr A = make_zmod(4);
    RingHom id = hom_identity(A);
    Ideal b = ideal_span(A, {2});
    Ideal c = zero_ideal(A);
    try {
        biamalg_new(id, id, b, c);
        FAIL("expected CompatibilityError");
    } catch (const CompatibilityError& e) {
        CHECK(e.witness_code == 2);  // f(2) in (2) but g(2) not in (0)
    }
}

TEST_CASE("ideal_bowtie") {
    RingPtr A = make_zmod(6);
    BiAmalg inst = duplication_instance(A, ideal_span(A, {2}));

    // i0 bowtie = b x c exactly
    Ideal bot = ideal_bowtie(inst, inst.i0);
    CHECK(bot.elems == inst.bxc.elems);

    // A bowtie = all of R
    Ideal top = ideal_bowtie(inst, unit_ideal(A));
    CHECK(top.size() == inst.order());

    // (3) bowtie = R since (3) + (2) = A
    Ideal three = ideal_span(A, {3});
    CHECK(ideal_bowtie(inst, three).size() == inst.order());

    // bowtie depends only on a + i0
    Ideal sum = ideal_sum(three, inst.i0);
    CHECK(ideal_bowtie(inst, sum).elems == ideal_bowtie(inst, three).elems);
}

TEST_CASE("sharp contractions") {
    RingPtr A = make_zmod(6);
    BiAmalg inst = duplication_instance(A, ideal_span(A, {2}));

    Ideal j3 = ideal_span(inst.B, {3});
    Ideal sb = sharp_contraction_B(inst, j3);
    CHECK(sb.size() == 6);  // {(a, a+x) : a in {0,3}, x in (2)}

    Ideal sbB = sharp_contraction_B(inst, unit_ideal(inst.B));
    CHECK(sbB.size() == inst.order());

    Ideal sbb = sharp_contraction_B(inst, inst.b);
    CHECK(inst.bxc.elems.is_subset_of(sbb.elems));
}

TEST_CASE("canonical maps verified") {
    BiAmalg inst = chain_instance();
    CanonicalMapReport rep = canonical_maps_report(inst);
    CHECK(rep.ok());
    // p maps the order-8 ring onto A/i0 of order 2 with kernel of size 4
    CHECK(inst.A_mod_i0->order() == 2);
    CHECK(inst.bxc.size() == 4);

    // duplication: iota is a |-> (a,a) and k = 0
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    CHECK(dup.A_mod_k->order() == 6);
    CHECK(canonical_maps_report(dup).ok());
    for (code_t a = 0; a < 6; ++a) {
        code_t r = dup.iota(dup.A_mod_k->class_of(a));
        code_t pair = dup.incl(r);
        CHECK(dup.BxC->product_left(pair) == a);
        CHECK(dup.BxC->product_right(pair) == a);
    }

    // b = c = 0: p is an isomorphism R ~ i_fg(A/i0)
    RingPtr Z12 = make_zmod(12);
    RingPtr Z4 = make_zmod(4);
    RingHom q = hom_canonical(Z12, Z4);
    BiAmalg proj = biamalg_new(q, q, zero_ideal(Z4), zero_ideal(Z4));
    CHECK(proj.order() == 4);
    CHECK(proj.p.is_injective());
    CHECK(proj.p.is_surjective());
}

TEST_CASE("fiber product identity") {
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    FiberProductReport r1 = verify_fiber_product(dup);
    CHECK(r1.ok());
    CHECK(r1.r_order == 18);

    FiberProductReport r2 = verify_fiber_product(chain_instance());
    CHECK(r2.ok());
    CHECK(r2.r_order == 8);

    // b = B, c = C: R = B x C exactly
    RingPtr Z4 = make_zmod(4);
    RingHom id4 = hom_identity(Z4);
    BiAmalg full = biamalg_new(id4, id4, unit_ideal(Z4), unit_ideal(Z4));
    CHECK(full.order() == 16);
    CHECK(verify_fiber_product(full).ok());
}

TEST_CASE("amalgamation special cases") {
    // duplication Z/16 along (4): order 64
    RingPtr Z16 = make_zmod(16);
    Amalgamation dup16 = duplication(Z16, ideal_span(Z16, {4}));
    CHECK(dup16.b_first.order() == 64);
    CHECK(dup16.classical.order() == 64);
    CHECK(dup16.classical_set_matches);
    CHECK(dup16.swap_iso.is_injective());
    CHECK(dup16.swap_iso.is_surjective());

    // amalgamation Z/32 -> Z/16 along (4): order 128
    RingPtr Z32 = make_zmod(32);
    RingHom f = hom_canonical(Z32, Z16);
    Amalgamation am = amalgamation_special(f, ideal_span(Z16, {4}));
    CHECK(am.b_first.order() == 128);
    CHECK(am.classical_set_matches);

    // b = 0: R isomorphic to A
    RingPtr Z9 = make_zmod(9);
    Amalgamation triv = amalgamation_special(hom_identity(Z9), zero_ideal(Z9));
    CHECK(triv.b_first.order() == 9);
}

TEST_CASE("order-reflection of bowtie ideals (ideals containing i0)") {
    // a1 bowtie <= a2 bowtie implies a1 <= a2, checked over every ideal pair
    std::vector<BiAmalg> instances;
    RingPtr Z6 = make_zmod(6);
    instances.push_back(duplication_instance(Z6, ideal_span(Z6, {2})));
    instances.push_back(chain_instance());
    RingPtr Z12 = make_zmod(12);
    instances.push_back(duplication_instance(Z12, ideal_span(Z12, {4})));

    for (const BiAmalg& inst : instances) {
        auto ideals = all_ideal_sets(*inst.A);
        std::vector<Ideal> over_i0;
        for (const auto& e : ideals) {
            if (inst.i0.elems.is_subset_of(e)) over_i0.push_back(Ideal{inst.A, {}, e});
        }
        for (const Ideal& a1 : over_i0) {
            Ideal b1 = ideal_bowtie(inst, a1);
            for (const Ideal& a2 : over_i0) {
                Ideal b2 = ideal_bowtie(inst, a2);
                if (b1.elems.is_subset_of(b2.elems)) CHECK(a1.elems.is_subset_of(a2.elems));
            }
        }
    }
}

TEST_CASE("module generator sets from the finiteness remarks") {
    // duplication Z/4 along (2)
    RingPtr Z4 = make_zmod(4);
    BiAmalg dup = duplication_instance(Z4, ideal_span(Z4, {2}));
    ModuleGeneratorsReport rep = module_generators(dup);
    CHECK(rep.r_generates);
    CHECK(rep.bxc_generates);

    // chain instance
    ModuleGeneratorsReport rep2 = module_generators(chain_instance());
    CHECK(rep2.r_generates);
    CHECK(rep2.bxc_generates);
}

TEST_CASE("induced localized data") {
    // duplication Z/6 along (2) at p = (2): S_p = {1,3,5}, B_Sp ~ Z/2, bB = 0
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    Ideal p2 = ideal_span(Z6, {2});
    LocalizedData loc = induced_localized_data(dup, p2);
    CHECK(loc.S_p.elems.to_codes() == std::vector<code_t>{1, 3, 5});
    CHECK(loc.B_S.ring->order() == 2);
    CHECK(loc.b_ext.size() == 1);
    CHECK(loc.contraction_identity);

    // chain instance at the maximal ideal (2) of A = Z/8: S = units of Z/4
    BiAmalg ch = chain_instance();
    Ideal m = ideal_span(ch.A, {2});
    LocalizedData loc2 = induced_localized_data(ch, m);
    CHECK(loc2.S_p.elems.to_codes() == std::vector<code_t>{1, 3});
    CHECK(loc2.B_S.ring->order() == 4);  // B already local: nothing collapses
    CHECK(loc2.contraction_identity);

    // non-prime and non-containing arguments rejected
    CHECK_THROWS_AS(induced_localized_data(dup, ideal_span(Z6, {0})), RingError);
    RingPtr Z12 = make_zmod(12);
    BiAmalg z12dup = duplication_instance(Z12, ideal_span(Z12, {4}));
    CHECK_THROWS_AS(induced_localized_data(z12dup, ideal_span(z12dup.A, {3})), RingError);
}
