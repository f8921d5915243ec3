#include "biamalg/hom.hpp"

#include <algorithm>

namespace biamalg {

bool RingHom::is_injective() const {
    Bitset seen(cod->order());
    for (code_t x = 0; x < dom->order(); ++x) {
        if (seen.test(img[x])) return false;
        seen.set(img[x]);
    }
    return true;
}

bool RingHom::is_surjective() const {
    Bitset seen(cod->order());
    for (code_t x = 0; x < dom->order(); ++x) seen.set(img[x]);
    return seen.count() == cod->order();
}

void verify_hom(const RingHom& h) {
    const Ring& D = *h.dom;
    const Ring& C = *h.cod;
    if (h.img.size() != D.order()) throw HomError("image table has wrong size");
    for (code_t x : h.img)
        if (x >= C.order()) throw HomError("image code out of range");
    if (h.img[0] != 0) throw HomError("map does not preserve 0");
    if (h.img[D.one()] != C.one()) throw HomError("map does not preserve 1");
    for (code_t a = 0; a < D.order(); ++a) {
        for (code_t b = a; b < D.order(); ++b) {
            if (h.img[D.add(a, b)] != C.add(h.img[a], h.img[b]))
                throw HomError("additivity fails at (" + D.element_str(a) + "," +
                               D.element_str(b) + ")");
            if (h.img[D.mul(a, b)] != C.mul(h.img[a], h.img[b]))
                throw HomError("multiplicativity fails at (" + D.element_str(a) + "," +
                               D.element_str(b) + ")");
        }
    }
}

RingHom hom_identity(RingPtr R) {
    std::vector<code_t> img(R->order());
    for (code_t x = 0; x < R->order(); ++x) img[x] = x;
    RingHom h{R, R, std::move(img)};
    verify_hom(h);
    return h;
}

RingHom hom_from_table(RingPtr dom, RingPtr cod, std::vector<code_t> img) {
    RingHom h{std::move(dom), std::move(cod), std::move(img)};
    verify_hom(h);
    return h;
}

RingHom hom_canonical(RingPtr dom, RingPtr cod) {
    if (dom == cod) return hom_identity(dom);

    if (auto* q = std::get_if<QuotientDesc>(&cod->descriptor()); q && q->base == dom) {
        std::vector<code_t> img(dom->order());
        for (code_t x = 0; x < dom->order(); ++x) img[x] = cod->class_of(x);
        return hom_from_table(dom, cod, std::move(img));
    }

    if (auto* s = std::get_if<SubringDesc>(&dom->descriptor()); s && s->base == cod) {
        std::vector<code_t> img(dom->order());
        for (code_t x = 0; x < dom->order(); ++x) img[x] = dom->embed(x);
        return hom_from_table(dom, cod, std::move(img));
    }

    auto* zd = std::get_if<ZmodDesc>(&dom->descriptor());
    auto* zc = std::get_if<ZmodDesc>(&cod->descriptor());
    if (zd && zc && zd->modulus % zc->modulus == 0) {
        std::vector<code_t> img(dom->order());
        for (code_t x = 0; x < dom->order(); ++x)
            img[x] = static_cast<code_t>(x % zc->modulus);
        return hom_from_table(dom, cod, std::move(img));
    }

    throw HomError("no canonical homomorphism from " + dom->name() + " to " + cod->name());
}

RingHom hom_from_generator_images(RingPtr dom, RingPtr cod,
                                  const std::vector<std::pair<code_t, code_t>>& gen_images) {
    const Ring& D = *dom;
    const Ring& C = *cod;
    constexpr code_t UNSET = static_cast<code_t>(-1);
    std::vector<code_t> img(D.order(), UNSET);

    std::vector<code_t> known;
    auto assign = [&](code_t x, code_t y) {
        if (img[x] == UNSET) {
            img[x] = y;
            known.push_back(x);
            return true;
        }
        return img[x] == y;
    };

    if (!assign(0, 0) || !assign(D.one(), C.one()))
        throw HomError("inconsistent generator images");
    for (auto [x, y] : gen_images) {
        if (x >= D.order() || y >= C.order()) throw HomError("generator image out of range");
        if (!assign(x, y)) throw HomError("inconsistent generator images");
    }

    // closure propagation
    for (std::size_t i = 0; i < known.size(); ++i) {
        code_t a = known[i];
        for (std::size_t j = 0; j <= i; ++j) {
            code_t b = known[j];
            if (!assign(D.add(a, b), C.add(img[a], img[b])) ||
                !assign(D.mul(a, b), C.mul(img[a], img[b])))
                throw HomError("generator images are not compatible with the ring operations");
        }
    }

    for (code_t x = 0; x < D.order(); ++x)
        if (img[x] == UNSET)
            throw HomError("generator images do not determine a total map (element " +
                           D.element_str(x) + " unreached)");
    return hom_from_table(dom, cod, std::move(img));
}

RingHom hom_compose(const RingHom& g, const RingHom& f) {
    if (f.cod != g.dom) throw HomError("composition domain mismatch");
    std::vector<code_t> img(f.dom->order());
    for (code_t x = 0; x < f.dom->order(); ++x) img[x] = g.img[f.img[x]];
    return hom_from_table(f.dom, g.cod, std::move(img));
}

RingHom hom_proj_left(RingPtr product) {
    auto* p = std::get_if<ProductDesc>(&product->descriptor());
    if (!p) throw HomError("not a product ring");
    std::vector<code_t> img(product->order());
    for (code_t x = 0; x < product->order(); ++x) img[x] = product->product_left(x);
    return hom_from_table(product, p->left, std::move(img));
}

RingHom hom_proj_right(RingPtr product) {
    auto* p = std::get_if<ProductDesc>(&product->descriptor());
    if (!p) throw HomError("not a product ring");
    std::vector<code_t> img(product->order());
    for (code_t x = 0; x < product->order(); ++x) img[x] = product->product_right(x);
    return hom_from_table(product, p->right, std::move(img));
}

RingHom hom_quotient_map(RingPtr quotient) {
    auto* q = std::get_if<QuotientDesc>(&quotient->descriptor());
    if (!q) throw HomError("not a quotient ring");
    return hom_canonical(q->base, quotient);
}

RingHom hom_subring_inclusion(RingPtr sub) {
    auto* s = std::get_if<SubringDesc>(&sub->descriptor());
    if (!s) throw HomError("not a subring");
    return hom_canonical(sub, s->base);
}

KernelImage hom_kernel_image(const RingHom& h) {
    KernelImage ki{ideal_contract(h, zero_ideal(h.cod)), Bitset(h.cod->order())};
    for (code_t x = 0; x < h.dom->order(); ++x) ki.image.set(h.img[x]);
    return ki;
}

Ideal ideal_contract(const RingHom& h, const Ideal& I) {
    if (I.ring != h.cod) throw RingMismatch("contracting an ideal of the wrong ring");
    Bitset e(h.dom->order());
    for (code_t x = 0; x < h.dom->order(); ++x)
        if (I.elems.test(h.img[x])) e.set(x);
    return Ideal{h.dom, minimal_generators(*h.dom, e), std::move(e)};
}

Ideal ideal_extend(const RingHom& h, const Ideal& I) {
    if (I.ring != h.dom) throw RingMismatch("extending an ideal of the wrong ring");
    std::vector<code_t> gens;
    std::vector<code_t> gi = I.gens.empty() ? I.elems.to_codes() : I.gens;
    gens.reserve(gi.size());
    for (code_t g : gi) gens.push_back(h.img[g]);
    return ideal_span(h.cod, std::move(gens));
}

// ---------------------------------------------------------------------------
// hom enumeration
// ---------------------------------------------------------------------------

namespace {

struct HomSearch {
    const Ring& D;
    const Ring& C;
    std::size_t cap;
    std::vector<RingHom>& out;
    RingPtr dom, cod;
    std::vector<code_t> img;
    static constexpr code_t UNSET = static_cast<code_t>(-1);

    bool full() const { return cap != 0 && out.size() >= cap; }

    // propagate closure from the trail of newly assigned codes; returns false
    // on contradiction and rolls nothing back (caller snapshots)
    bool propagate(std::vector<code_t>& trail) {
        for (std::size_t i = 0; i < trail.size(); ++i) {
            code_t a = trail[i];
            for (code_t b = 0; b < D.order(); ++b) {
                if (img[b] == UNSET) continue;
                code_t sums[2] = {D.add(a, b), D.mul(a, b)};
                code_t vals[2] = {C.add(img[a], img[b]), C.mul(img[a], img[b])};
                for (int k = 0; k < 2; ++k) {
                    if (img[sums[k]] == UNSET) {
                        img[sums[k]] = vals[k];
                        trail.push_back(sums[k]);
                    } else if (img[sums[k]] != vals[k]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void search() {
        if (full()) return;
        code_t next = UNSET;
        for (code_t x = 0; x < D.order(); ++x) {
            if (img[x] == UNSET) {
                next = x;
                break;
            }
        }
        if (next == UNSET) {
            RingHom h{dom, cod, img};
            verify_hom(h);
            out.push_back(std::move(h));
            return;
        }
        for (code_t y = 0; y < C.order(); ++y) {
            if (full()) return;
            std::vector<code_t> snapshot = img;
            std::vector<code_t> trail{next};
            img[next] = y;
            if (propagate(trail)) search();
            img = std::move(snapshot);
        }
    }
};

}  // namespace

std::vector<RingHom> enumerate_homs(RingPtr dom, RingPtr cod, std::size_t cap) {
    std::vector<RingHom> out;
    HomSearch hs{*dom, *cod, cap, out, dom, cod, {}};
    hs.img.assign(dom->order(), HomSearch::UNSET);
    std::vector<code_t> trail;
    hs.img[0] = 0;
    trail.push_back(0);
    hs.img[dom->one()] = cod->one();
    if (dom->one() != 0) trail.push_back(dom->one());
    if (hs.propagate(trail)) hs.search();
    return out;
}

// ---------------------------------------------------------------------------
// multiplicative sets and localization
// ---------------------------------------------------------------------------

MultSet make_mult_set(RingPtr R, const Bitset& elems) {
    if (!elems.test(R->one())) throw HomError("multiplicative set must contain 1");
    MultSet s{R, elems, false};
    // close under multiplication
    bool changed = true;
    while (changed) {
        changed = false;
        auto codes = s.elems.to_codes();
        for (code_t a : codes) {
            for (code_t b : codes) {
                code_t p = R->mul(a, b);
                if (!s.elems.test(p)) {
                    s.elems.set(p);
                    s.closure_applied = true;
                    changed = true;
                }
            }
        }
    }
    return s;
}

MultSet complement_of_prime(const Ideal& p) {
    const Ring& R = *p.ring;
    Bitset e(R.order());
    for (code_t x = 0; x < R.order(); ++x)
        if (!p.elems.test(x)) e.set(x);
    return make_mult_set(p.ring, e);
}

Localization localize_finite(RingPtr R, const MultSet& S) {
    if (S.ring != R) throw RingMismatch("multiplicative set of the wrong ring");
    const Ring& A = *R;
    Bitset K(A.order());
    auto scodes = S.elems.to_codes();
    for (code_t x = 0; x < A.order(); ++x) {
        for (code_t s : scodes) {
            if (A.mul(s, x) == 0) {
                K.set(x);
                break;
            }
        }
    }
    RingPtr L = make_quotient(R, K.to_codes());
    std::vector<code_t> img(A.order());
    for (code_t x = 0; x < A.order(); ++x) img[x] = L->class_of(x);
    RingHom map = hom_from_table(R, L, std::move(img));

    for (code_t s : scodes)
        if (!L->is_unit(map(s)))
            throw HomError("localization failed to invert " + A.element_str(s));

    Ideal kernel{R, minimal_generators(A, K), K};
    return Localization{L, std::move(map), std::move(kernel)};
}

std::optional<RingHom> factor_through(const RingHom& phi, const RingHom& q) {
    if (phi.dom != q.dom) return std::nullopt;
    if (!q.is_surjective()) return std::nullopt;
    constexpr code_t UNSET = static_cast<code_t>(-1);
    std::vector<code_t> img(q.cod->order(), UNSET);
    for (code_t x = 0; x < q.dom->order(); ++x) {
        code_t target = q.img[x];
        if (img[target] == UNSET) img[target] = phi.img[x];
        else if (img[target] != phi.img[x]) return std::nullopt;  // not well-defined
    }
    try {
        return hom_from_table(q.cod, phi.cod, std::move(img));
    } catch (const HomError&) {
        return std::nullopt;
    }
}

}  // namespace biamalg
