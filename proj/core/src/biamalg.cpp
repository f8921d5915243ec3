#include "biamalg/biamalg.hpp"

#include <algorithm>

namespace biamalg {

code_t BiAmalg::element(code_t beta, code_t gamma) const {
    auto loc = R->locate(BxC->product_pair(beta, gamma));
    if (!loc) throw RingError("element not in the bi-amalgamation");
    return *loc;
}

BiAmalg biamalg_new(const RingHom& f, const RingHom& g, Ideal b, Ideal c) {
    if (f.dom != g.dom) throw RingMismatch("f and g must share their domain");
    if (b.ring != f.cod) throw RingMismatch("b must be an ideal of the codomain of f");
    if (c.ring != g.cod) throw RingMismatch("c must be an ideal of the codomain of g");

    BiAmalg inst;
    inst.A = f.dom;
    inst.B = f.cod;
    inst.C = g.cod;
    inst.f = f;
    inst.g = g;
    inst.b = std::move(b);
    inst.c = std::move(c);

    const Ring& A = *inst.A;

    // compatibility: f^-1(b) = g^-1(c), with witness on failure
    Ideal fb = ideal_contract(f, inst.b);
    Ideal gc = ideal_contract(g, inst.c);
    if (fb.elems != gc.elems) {
        for (code_t a = 0; a < A.order(); ++a) {
            if (fb.elems.test(a) != gc.elems.test(a)) {
                bool in_b = fb.elems.test(a);
                throw CompatibilityError(
                    "incompatible ideals: witness a = " + A.element_str(a) +
                        (in_b ? " has f(a) in b but g(a) not in c"
                              : " has g(a) in c but f(a) not in b"),
                    a);
            }
        }
    }
    inst.i0 = std::move(fb);

    Ideal kerf = hom_kernel_image(f).kernel;
    Ideal kerg = hom_kernel_image(g).kernel;
    inst.k = ideal_intersect(kerf, kerg);

    inst.BxC = make_product(inst.B, inst.C);

    // enumerate R = {(f(a)+b', g(a)+c')}
    const Ring& P = *inst.BxC;
    Bitset relems(P.order());
    auto bcodes = inst.b.elems.to_codes();
    auto ccodes = inst.c.elems.to_codes();
    for (code_t a = 0; a < A.order(); ++a) {
        code_t fa = f(a), ga = g(a);
        for (code_t bb : bcodes) {
            code_t left = inst.B->add(fa, bb);
            for (code_t cc : ccodes)
                relems.set(P.product_pair(left, inst.C->add(ga, cc)));
        }
    }
    inst.R = make_subring(inst.BxC, relems.to_codes());  // verifies subring closure

    // quotients and the lower-right corner of the pullback square
    inst.A_mod_i0 = make_quotient(inst.A, inst.i0.elems.to_codes());
    inst.A_mod_k = make_quotient(inst.A, inst.k.elems.to_codes());
    inst.B_mod_b = make_quotient(inst.B, inst.b.elems.to_codes());
    inst.C_mod_c = make_quotient(inst.C, inst.c.elems.to_codes());
    inst.BbxCc = make_product(inst.B_mod_b, inst.C_mod_c);

    std::size_t expected =
        inst.A_mod_i0->order() * inst.b.elems.count() * inst.c.elems.count();
    if (inst.R->order() != expected)
        throw RingError("bi-amalgamation size identity violated (library bug)");

    inst.incl = hom_subring_inclusion(inst.R);

    {
        std::vector<code_t> img(P.order());
        for (code_t x = 0; x < P.order(); ++x)
            img[x] = inst.BbxCc->product_pair(inst.B_mod_b->class_of(P.product_left(x)),
                                              inst.C_mod_c->class_of(P.product_right(x)));
        inst.pi = hom_from_table(inst.BxC, inst.BbxCc, std::move(img));
    }

    {
        std::vector<code_t> img(inst.A_mod_i0->order());
        for (code_t u = 0; u < inst.A_mod_i0->order(); ++u) {
            code_t a = inst.A_mod_i0->rep_of(u);
            img[u] = inst.BbxCc->product_pair(inst.B_mod_b->class_of(f(a)),
                                              inst.C_mod_c->class_of(g(a)));
        }
        inst.i_fg = hom_from_table(inst.A_mod_i0, inst.BbxCc, std::move(img));
        if (!inst.i_fg.is_injective()) throw RingError("i_fg not injective (library bug)");
    }

    {
        // p: R -> A/i0 inverts i_fg on the image of pi . incl
        std::vector<code_t> back(inst.BbxCc->order(), static_cast<code_t>(-1));
        for (code_t u = 0; u < inst.A_mod_i0->order(); ++u) back[inst.i_fg(u)] = u;
        std::vector<code_t> img(inst.R->order());
        for (code_t r = 0; r < inst.R->order(); ++r) {
            code_t down = inst.pi(inst.incl(r));
            if (back[down] == static_cast<code_t>(-1))
                throw RingError("element of R outside the pullback (library bug)");
            img[r] = back[down];
        }
        inst.p = hom_from_table(inst.R, inst.A_mod_i0, std::move(img));
        if (!inst.p.is_surjective()) throw RingError("p not surjective (library bug)");
    }

    {
        std::vector<code_t> img(inst.A_mod_k->order());
        for (code_t u = 0; u < inst.A_mod_k->order(); ++u) {
            code_t a = inst.A_mod_k->rep_of(u);
            auto loc = inst.R->locate(P.product_pair(f(a), g(a)));
            if (!loc) throw RingError("diagonal image not in R (library bug)");
            img[u] = *loc;
        }
        inst.iota = hom_from_table(inst.A_mod_k, inst.R, std::move(img));
        if (!inst.iota.is_injective()) throw RingError("iota not injective (library bug)");
    }

    inst.proj_B = hom_compose(hom_proj_left(inst.BxC), inst.incl);
    inst.proj_C = hom_compose(hom_proj_right(inst.BxC), inst.incl);

    // b x c as an ideal of R
    {
        Bitset e(inst.R->order());
        for (code_t bb : bcodes)
            for (code_t cc : ccodes) {
                auto loc = inst.R->locate(P.product_pair(bb, cc));
                if (!loc) throw RingError("b x c not inside R (library bug)");
                e.set(*loc);
            }
        inst.bxc = ideal_from_set(inst.R, e);
    }

    // kernel of p must be exactly b x c
    if (ideal_contract(inst.p, zero_ideal(inst.A_mod_i0)).elems != inst.bxc.elems)
        throw RingError("kernel of p is not b x c (library bug)");

    return inst;
}

Ideal ideal_bowtie(const BiAmalg& inst, const Ideal& a) {
    if (a.ring != inst.A) throw RingMismatch("bowtie argument must be an ideal of A");
    const Ring& P = *inst.BxC;
    Bitset e(inst.R->order());
    auto acodes = a.elems.to_codes();
    auto bcodes = inst.b.elems.to_codes();
    auto ccodes = inst.c.elems.to_codes();
    for (code_t p : acodes) {
        code_t fp = inst.f(p), gp = inst.g(p);
        for (code_t bb : bcodes) {
            code_t left = inst.B->add(fp, bb);
            for (code_t cc : ccodes) {
                auto loc = inst.R->locate(P.product_pair(left, inst.C->add(gp, cc)));
                if (!loc) throw RingError("bowtie element escaped R (library bug)");
                e.set(*loc);
            }
        }
    }
    Ideal out = ideal_from_set(inst.R, e);  // verifies the ideal property
    if (!inst.bxc.elems.is_subset_of(out.elems))
        throw RingError("bowtie ideal does not contain b x c (library bug)");

    Ideal a_plus_i0 = ideal_sum(a, inst.i0);
    std::size_t expected = (a_plus_i0.size() / inst.i0.size()) * inst.b.size() * inst.c.size();
    if (out.size() != expected)
        throw RingError("bowtie ideal size identity violated (library bug)");
    return out;
}

namespace {

Ideal sharp_generic(const BiAmalg& inst, const Ideal& j, bool left_side) {
    const Ring& P = *inst.BxC;
    // direct scan over R
    Bitset e(inst.R->order());
    for (code_t r = 0; r < inst.R->order(); ++r) {
        code_t coord = left_side ? P.product_left(inst.incl(r)) : P.product_right(inst.incl(r));
        if (j.elems.test(coord)) e.set(r);
    }
    // contraction of j x C (resp. B x j') along the inclusion
    Bitset full(P.order());
    for (code_t x = 0; x < P.order(); ++x) {
        code_t coord = left_side ? P.product_left(x) : P.product_right(x);
        if (j.elems.test(coord)) full.set(x);
    }
    Ideal big{inst.BxC, {}, full};
    Ideal contracted = ideal_contract(inst.incl, big);
    if (contracted.elems != e)
        throw RingError("sharp ideal disagrees with contraction (library bug)");
    return ideal_from_set(inst.R, e);
}

}  // namespace

Ideal sharp_contraction_B(const BiAmalg& inst, const Ideal& j) {
    if (j.ring != inst.B) throw RingMismatch("sharp_B takes an ideal of B");
    return sharp_generic(inst, j, true);
}

Ideal sharp_contraction_C(const BiAmalg& inst, const Ideal& jprime) {
    if (jprime.ring != inst.C) throw RingMismatch("sharp_C takes an ideal of C");
    return sharp_generic(inst, jprime, false);
}

CanonicalMapReport canonical_maps_report(const BiAmalg& inst) {
    CanonicalMapReport rep;
    rep.p_surjective = inst.p.is_surjective();
    rep.p_kernel_is_bxc =
        ideal_contract(inst.p, zero_ideal(inst.A_mod_i0)).elems == inst.bxc.elems;
    rep.iota_injective = inst.iota.is_injective();
    rep.i_fg_injective = inst.i_fg.is_injective();
    return rep;
}

FiberProductReport verify_fiber_product(const BiAmalg& inst) {
    FiberProductReport rep;
    const Ring& P = *inst.BxC;

    Bitset image(inst.BbxCc->order());
    for (code_t u = 0; u < inst.A_mod_i0->order(); ++u) image.set(inst.i_fg(u));
    Bitset pullback(P.order());
    for (code_t x = 0; x < P.order(); ++x)
        if (image.test(inst.pi(x))) pullback.set(x);
    Bitset relems(P.order());
    for (code_t r = 0; r < inst.R->order(); ++r) relems.set(inst.incl(r));
    rep.set_equality = pullback == relems;

    rep.diagram_commutes = true;
    for (code_t r = 0; r < inst.R->order(); ++r) {
        if (inst.i_fg(inst.p(r)) != inst.pi(inst.incl(r))) {
            rep.diagram_commutes = false;
            break;
        }
    }

    rep.r_order = inst.R->order();
    rep.expected_order = inst.A_mod_i0->order() * inst.b.size() * inst.c.size();
    rep.size_identity = rep.r_order == rep.expected_order;
    return rep;
}

Amalgamation amalgamation_special(const RingHom& f, const Ideal& b) {
    if (b.ring != f.cod) throw RingMismatch("b must be an ideal of the codomain of f");
    Amalgamation am;
    RingPtr A = f.dom;
    RingHom id = hom_identity(A);
    Ideal i0 = ideal_contract(f, b);

    am.b_first = biamalg_new(f, id, b, i0);
    am.classical = biamalg_new(id, f, i0, b);

    // swap isomorphism (beta, alpha) -> (alpha, beta)
    {
        const BiAmalg& src = am.b_first;
        const BiAmalg& dst = am.classical;
        std::vector<code_t> img(src.R->order());
        for (code_t r = 0; r < src.R->order(); ++r) {
            code_t x = src.incl(r);
            img[r] = dst.element(src.BxC->product_right(x), src.BxC->product_left(x));
        }
        am.swap_iso = hom_from_table(src.R, dst.R, std::move(img));
        if (!am.swap_iso.is_injective() || !am.swap_iso.is_surjective())
            throw RingError("coordinate swap is not an isomorphism (library bug)");
    }

    // the classical-order ring is literally {(a, f(a)+b)} inside A x B
    {
        const BiAmalg& dst = am.classical;  // here B = A and C = cod(f)
        Bitset direct(dst.BxC->order());
        for (code_t a = 0; a < A->order(); ++a) {
            code_t fa = f(a);
            b.elems.for_each([&](std::size_t bb) {
                direct.set(dst.BxC->product_pair(a, dst.C->add(fa, static_cast<code_t>(bb))));
            });
        }
        Bitset actual(dst.BxC->order());
        for (code_t r = 0; r < dst.R->order(); ++r) actual.set(dst.incl(r));
        am.classical_set_matches = direct == actual;
    }
    return am;
}

Amalgamation duplication(RingPtr A, const Ideal& a) {
    return amalgamation_special(hom_identity(std::move(A)), a);
}

BiAmalg duplication_instance(RingPtr A, const Ideal& a) {
    RingHom id = hom_identity(std::move(A));
    return biamalg_new(id, id, a, a);
}

namespace {

/// Module span of `seeds` under addition and the scalar action given by
/// `scalars` (codes in the ambient ring acting by multiplication).
Bitset module_span(const Ring& ambient, const std::vector<code_t>& scalars,
                   const std::vector<code_t>& seeds) {
    Bitset span(ambient.order());
    span.set(0);
    std::vector<code_t> frontier;
    for (code_t s : seeds)
        for (code_t a : scalars) {
            code_t v = ambient.mul(a, s);
            if (!span.test(v)) {
                span.set(v);
                frontier.push_back(v);
            }
        }
    // close under addition
    std::vector<code_t> stack = span.to_codes();
    for (std::size_t i = 0; i < stack.size(); ++i) {
        for (code_t t : frontier) {
            code_t u = ambient.add(stack[i], t);
            if (!span.test(u)) {
                span.set(u);
                stack.push_back(u);
            }
        }
    }
    return span;
}

/// Greedy generating set of `target` as a module over the scalar action.
std::vector<code_t> greedy_module_generators(const Ring& ambient,
                                             const std::vector<code_t>& scalars,
                                             const Bitset& target) {
    std::vector<code_t> gens;
    Bitset span(ambient.order());
    span.set(0);
    while (span != target) {
        code_t next = static_cast<code_t>(-1);
        auto codes = target.to_codes();
        for (code_t c : codes) {
            if (!span.test(c)) {
                next = c;
                break;
            }
        }
        if (next == static_cast<code_t>(-1)) break;
        gens.push_back(next);
        span = module_span(ambient, scalars, gens);
    }
    return gens;
}

}  // namespace

ModuleGeneratorsReport module_generators(const BiAmalg& inst) {
    ModuleGeneratorsReport rep;
    const Ring& P = *inst.BxC;

    // A-module generators of b inside B (action through f) and of c inside C
    std::vector<code_t> f_im, g_im;
    for (code_t a = 0; a < inst.A->order(); ++a) {
        f_im.push_back(inst.f(a));
        g_im.push_back(inst.g(a));
    }
    std::sort(f_im.begin(), f_im.end());
    f_im.erase(std::unique(f_im.begin(), f_im.end()), f_im.end());
    std::sort(g_im.begin(), g_im.end());
    g_im.erase(std::unique(g_im.begin(), g_im.end()), g_im.end());

    std::vector<code_t> bgens = greedy_module_generators(*inst.B, f_im, inst.b.elems);
    std::vector<code_t> cgens = greedy_module_generators(*inst.C, g_im, inst.c.elems);

    // candidate generators of R as A/k-module: (1,1), (b_i,0), (0,c_j)
    rep.r_generators.push_back(inst.R->one());
    for (code_t bg : bgens) rep.r_generators.push_back(inst.element(bg, 0));
    for (code_t cg : cgens) rep.r_generators.push_back(inst.element(0, cg));

    // scalar action of A/k on R through iota
    std::vector<code_t> r_scalars;
    for (code_t u = 0; u < inst.A_mod_k->order(); ++u) r_scalars.push_back(inst.iota(u));
    Bitset full_r(inst.R->order());
    for (code_t r = 0; r < inst.R->order(); ++r) full_r.set(r);
    rep.r_generates = module_span(*inst.R, r_scalars, rep.r_generators) == full_r;

    // B x C as an R-module: generators (x_i, 0), (0, y_j) with x_i generating
    // B as an A-module and y_j generating C
    Bitset fullB(inst.B->order());
    for (code_t x = 0; x < inst.B->order(); ++x) fullB.set(x);
    Bitset fullC(inst.C->order());
    for (code_t x = 0; x < inst.C->order(); ++x) fullC.set(x);
    std::vector<code_t> xgens = greedy_module_generators(*inst.B, f_im, fullB);
    std::vector<code_t> ygens = greedy_module_generators(*inst.C, g_im, fullC);
    for (code_t xg : xgens) rep.bxc_generators.push_back(P.product_pair(xg, 0));
    for (code_t yg : ygens) rep.bxc_generators.push_back(P.product_pair(0, yg));

    std::vector<code_t> p_scalars;
    for (code_t r = 0; r < inst.R->order(); ++r) p_scalars.push_back(inst.incl(r));
    Bitset full_p(P.order());
    for (code_t x = 0; x < P.order(); ++x) full_p.set(x);
    rep.bxc_generates = module_span(P, p_scalars, rep.bxc_generators) == full_p;

    return rep;
}

LocalizedData induced_localized_data(const BiAmalg& inst, const Ideal& p) {
    if (p.ring != inst.A) throw RingMismatch("prime must be an ideal of A");
    IdealPredicates preds = ideal_predicates(p);
    if (!preds.is_prime) throw RingError("localization point is not prime");
    if (!inst.i0.elems.is_subset_of(p.elems))
        throw RingError("prime does not contain i0");

    LocalizedData data;
    data.prime = p;

    const Ring& A = *inst.A;

    // S_p = f(A \ p) + b (elementwise sums), T_p likewise
    Bitset sset(inst.B->order());
    Bitset tset(inst.C->order());
    for (code_t a = 0; a < A.order(); ++a) {
        if (p.elems.test(a)) continue;
        code_t fa = inst.f(a), ga = inst.g(a);
        inst.b.elems.for_each(
            [&](std::size_t bb) { sset.set(inst.B->add(fa, static_cast<code_t>(bb))); });
        inst.c.elems.for_each(
            [&](std::size_t cc) { tset.set(inst.C->add(ga, static_cast<code_t>(cc))); });
    }
    data.S_p = make_mult_set(inst.B, sset);
    data.T_p = make_mult_set(inst.C, tset);

    data.A_p = localize_finite(inst.A, complement_of_prime(p));
    data.B_S = localize_finite(inst.B, data.S_p);
    data.C_T = localize_finite(inst.C, data.T_p);

    // induced homs A_p -> B_S, A_p -> C_T on coset representatives
    {
        std::vector<code_t> img(data.A_p.ring->order());
        for (code_t u = 0; u < data.A_p.ring->order(); ++u)
            img[u] = data.B_S.map(inst.f(data.A_p.ring->rep_of(u)));
        data.f_p = hom_from_table(data.A_p.ring, data.B_S.ring, std::move(img));
    }
    {
        std::vector<code_t> img(data.A_p.ring->order());
        for (code_t u = 0; u < data.A_p.ring->order(); ++u)
            img[u] = data.C_T.map(inst.g(data.A_p.ring->rep_of(u)));
        data.g_p = hom_from_table(data.A_p.ring, data.C_T.ring, std::move(img));
    }

    data.b_ext = ideal_extend(data.B_S.map, inst.b);
    data.c_ext = ideal_extend(data.C_T.map, inst.c);
    data.i0_ext = ideal_extend(data.A_p.map, inst.i0);

    Ideal lhs = ideal_contract(data.f_p, data.b_ext);
    Ideal rhs = ideal_contract(data.g_p, data.c_ext);
    data.contraction_identity =
        lhs.elems == rhs.elems && lhs.elems == data.i0_ext.elems;
    return data;
}

}  // namespace biamalg
