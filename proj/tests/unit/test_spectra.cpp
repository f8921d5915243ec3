#include <doctest.h>

#include "biamalg/spectra.hpp"

using namespace biamalg;

namespace {

BiAmalg chain_instance() {
    RingPtr A = make_zmod(8);
    RingPtr B = make_zmod(4);
    RingHom f = hom_canonical(A, B);
    Ideal b = ideal_span(B, {2});
    return biamalg_new(f, f, b, b);
}

}  // namespace

TEST_CASE("assemble_spec: Z/6 duplication along (2) has three tagged primes") {
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    SpecReport rep = assemble_spec(dup);
    CHECK(rep.ok());
    REQUIRE(rep.primes.size() == 3);
    int bowtie = 0, sharpB = 0, sharpC = 0;
    for (const auto& p : rep.primes) {
        if (p.provenance == PrimeProvenance::Bowtie) ++bowtie;
        if (p.provenance == PrimeProvenance::SharpB) ++sharpB;
        if (p.provenance == PrimeProvenance::SharpC) ++sharpC;
        CHECK(p.maximal);
    }
    CHECK(bowtie == 1);
    CHECK(sharpB == 1);
    CHECK(sharpC == 1);
}

TEST_CASE("assemble_spec: chain instance is local with one bowtie prime") {
    SpecReport rep = assemble_spec(chain_instance());
    CHECK(rep.ok());
    REQUIRE(rep.primes.size() == 1);
    CHECK(rep.primes[0].provenance == PrimeProvenance::Bowtie);
}

TEST_CASE("assemble_spec: b = B, c = C gives Spec(B x C), all sharp") {
    RingPtr Z4 = make_zmod(4);
    RingPtr Z9 = make_zmod(9);
    RingHom f = hom_canonical(make_zmod(36), Z4);
    RingHom g = hom_canonical(f.dom, Z9);
    BiAmalg inst = biamalg_new(f, g, unit_ideal(Z4), unit_ideal(Z9));
    CHECK(inst.order() == 36);
    SpecReport rep = assemble_spec(inst);
    CHECK(rep.ok());
    REQUIRE(rep.primes.size() == 2);
    for (const auto& p : rep.primes) CHECK(p.provenance != PrimeProvenance::Bowtie);
}

TEST_CASE("spectrum structure theorem verification") {
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    CHECK(verify_spec_theorem(dup).ok());

    // V(i0) empty: vacuous pass
    RingPtr Z4 = make_zmod(4);
    RingHom id4 = hom_identity(Z4);
    BiAmalg full = biamalg_new(id4, id4, unit_ideal(Z4), unit_ideal(Z4));
    CHECK(verify_spec_theorem(full).ok());

    // Z/12 duplication along (4): V((4)) = {(2)} maps onto the unique prime
    // over b x c
    RingPtr Z12 = make_zmod(12);
    BiAmalg dup12 = duplication_instance(Z12, ideal_span(Z12, {4}));
    CHECK(verify_spec_theorem(dup12).ok());
    SpecReport rep = assemble_spec(dup12);
    int bowtie = 0;
    for (const auto& p : rep.primes)
        if (p.provenance == PrimeProvenance::Bowtie) ++bowtie;
    CHECK(bowtie == 1);

    CHECK(verify_spec_theorem(chain_instance()).ok());
}

TEST_CASE("local criterion") {
    // chain instance: local both ways
    LocalCriterionReport r1 = local_criterion(chain_instance());
    CHECK(r1.criterion_verdict);
    CHECK(r1.direct_verdict);
    CHECK(r1.agree);

    // Z/6 duplication along (2): A/i0 = Z/2 is local but (2) is not inside
    // Jac(Z/6) = 0, so not local; R indeed has three maximal ideals
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    LocalCriterionReport r2 = local_criterion(dup);
    CHECK(r2.a_mod_i0_local);
    CHECK(!r2.b_in_jacobson);
    CHECK(!r2.criterion_verdict);
    CHECK(!r2.direct_verdict);
    CHECK(r2.agree);
    CHECK(enumerate_spec(*dup.R).primes.size() == 3);

    // b = c = 0 over a field quotient: local
    RingPtr Z12 = make_zmod(12);
    RingPtr Z3 = make_zmod(3);
    RingHom q = hom_canonical(Z12, Z3);
    BiAmalg proj = biamalg_new(q, q, zero_ideal(Z3), zero_ideal(Z3));
    LocalCriterionReport r3 = local_criterion(proj);
    CHECK(r3.criterion_verdict);
    CHECK(r3.agree);
}

TEST_CASE("localization isomorphism at primes over i0") {
    // Z/6 duplication along (2) at p = (2): both sides collapse to Z/2
    RingPtr Z6 = make_zmod(6);
    BiAmalg dup = duplication_instance(Z6, ideal_span(Z6, {2}));
    LocalizationIsoReport rep = verify_localization_iso(dup, ideal_span(Z6, {2}));
    CHECK(rep.ok());
    CHECK(rep.lhs_order == 2);
    CHECK(rep.rhs_order == 2);

    // chain instance at its maximal ideal: R is already local
    BiAmalg ch = chain_instance();
    LocalizationIsoReport rep2 = verify_localization_iso(ch, ideal_span(ch.A, {2}));
    CHECK(rep2.ok());
    CHECK(rep2.lhs_order == ch.order());

    // sweep: every (instance, prime >= i0) pair stays isomorphic
    for (BiAmalg inst : {dup, std::move(ch)}) {
        for (const auto& p : enumerate_spec(*inst.A).primes) {
            if (!inst.i0.elems.is_subset_of(p.ideal.elems)) continue;
            CHECK(verify_localization_iso(inst, p.ideal).ok());
        }
    }
}
