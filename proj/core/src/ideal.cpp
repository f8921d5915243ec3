#include "biamalg/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace biamalg {

std::string Ideal::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    elems.for_each([&](std::size_t i) {
        if (!first) os << ",";
        first = false;
        os << ring->element_str(static_cast<code_t>(i));
    });
    os << "}";
    return os.str();
}

Bitset principal_span(const Ring& R, code_t x) {
    Bitset s(R.order());
    for (code_t r = 0; r < R.order(); ++r) s.set(R.mul(r, x));
    return s;
}

Bitset set_sum(const Ring& R, const Bitset& I, const Bitset& J) {
    // both arguments are ideals here: the elementwise sum {i+j} is again an
    // ideal, and it is everything as soon as either side contains 1
    if (I.test(R.one()) || J.test(R.one())) {
        Bitset full(R.order());
        for (code_t x = 0; x < R.order(); ++x) full.set(x);
        return full;
    }
    Bitset out(R.order());
    auto icodes = I.to_codes();
    auto jcodes = J.to_codes();
    for (code_t i : icodes)
        for (code_t j : jcodes) out.set(R.add(i, j));
    return out;
}

Ideal ideal_span(RingPtr R, std::vector<code_t> gens) {
    Bitset elems(R->order());
    elems.set(0);
    for (code_t g : gens) {
        if (g >= R->order()) throw RingError("generator out of range");
        elems = set_sum(*R, elems, principal_span(*R, g));
    }
    return Ideal{std::move(R), std::move(gens), std::move(elems)};
}

bool is_ideal_set(const Ring& R, const Bitset& elems) {
    if (!elems.test(0)) return false;
    auto codes = elems.to_codes();
    for (code_t x : codes) {
        for (code_t y : codes)
            if (!elems.test(R.add(x, y))) return false;
        for (code_t r = 0; r < R.order(); ++r)
            if (!elems.test(R.mul(r, x))) return false;
    }
    return true;
}

Ideal ideal_from_set(RingPtr R, const Bitset& elems) {
    if (!is_ideal_set(*R, elems)) throw RingError("element set is not an ideal");
    Ideal I{R, minimal_generators(*R, elems), elems};
    return I;
}

Ideal zero_ideal(RingPtr R) {
    Bitset e(R->order());
    e.set(0);
    return Ideal{std::move(R), {}, std::move(e)};
}

Ideal unit_ideal(RingPtr R) {
    code_t one = R->one();
    return ideal_span(std::move(R), {one});
}

static void check_same_ring(const Ideal& I, const Ideal& J) {
    if (I.ring != J.ring) throw RingMismatch("ideals live in different rings");
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    Ideal out{I.ring, I.gens, set_sum(*I.ring, I.elems, J.elems)};
    out.gens.insert(out.gens.end(), J.gens.begin(), J.gens.end());
    return out;
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    // generated by pairwise products of generator sets; fall back to the full
    // element sets when a generator list is empty but the ideal is not zero
    const Ring& R = *I.ring;
    std::vector<code_t> gi = I.gens.empty() ? I.elems.to_codes() : I.gens;
    std::vector<code_t> gj = J.gens.empty() ? J.elems.to_codes() : J.gens;
    std::vector<code_t> pg;
    pg.reserve(gi.size() * gj.size());
    for (code_t a : gi)
        for (code_t b : gj) pg.push_back(R.mul(a, b));
    std::sort(pg.begin(), pg.end());
    pg.erase(std::unique(pg.begin(), pg.end()), pg.end());
    return ideal_span(I.ring, std::move(pg));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    Bitset e = I.elems & J.elems;
    return Ideal{I.ring, minimal_generators(*I.ring, e), std::move(e)};
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    const Ring& R = *I.ring;
    std::vector<code_t> gj = J.gens.empty() ? J.elems.to_codes() : J.gens;
    Bitset e(R.order());
    for (code_t x = 0; x < R.order(); ++x) {
        bool ok = true;
        for (code_t g : gj) {
            if (!I.elems.test(R.mul(x, g))) {
                ok = false;
                break;
            }
        }
        if (ok) e.set(x);
    }
    return Ideal{I.ring, minimal_generators(R, e), std::move(e)};
}

Ideal ideal_annihilator(const Ideal& J) { return ideal_colon(zero_ideal(J.ring), J); }

Ideal ideal_power(const Ideal& I, unsigned k) {
    if (k == 0) return unit_ideal(I.ring);
    Ideal r = I;
    for (unsigned i = 1; i < k; ++i) r = ideal_product(r, I);
    return r;
}

Ideal ideal_scale(const Ideal& I, code_t x) {
    const Ring& R = *I.ring;
    Bitset e(R.order());
    I.elems.for_each([&](std::size_t i) { e.set(R.mul(x, static_cast<code_t>(i))); });
    return Ideal{I.ring, minimal_generators(R, e), std::move(e)};
}

Ideal ideal_arith(IdealOp op, const Ideal& I, const Ideal* J, unsigned power) {
    switch (op) {
        case IdealOp::Sum: return ideal_sum(I, *J);
        case IdealOp::Product: return ideal_product(I, *J);
        case IdealOp::Intersect: return ideal_intersect(I, *J);
        case IdealOp::Colon: return ideal_colon(I, *J);
        case IdealOp::Annihilator: return ideal_annihilator(I);
        case IdealOp::Power: return ideal_power(I, power);
    }
    throw RingError("unreachable");
}

IdealPredicates ideal_predicates(const Ideal& I) {
    const Ring& R = *I.ring;
    const code_t n = R.order();
    IdealPredicates p;
    p.is_proper = !I.elems.test(R.one());

    if (p.is_proper) {
        bool prime = true;
        for (code_t a = 0; a < n && prime; ++a) {
            if (I.elems.test(a)) continue;
            for (code_t b = a; b < n && prime; ++b) {
                if (I.elems.test(b)) continue;
                if (I.elems.test(R.mul(a, b))) prime = false;
            }
        }
        p.is_prime = prime;

        // maximal <=> every element off I is invertible modulo I
        bool maximal = true;
        for (code_t a = 0; a < n && maximal; ++a) {
            if (I.elems.test(a)) continue;
            bool inv = false;
            for (code_t b = 0; b < n; ++b) {
                if (I.elems.test(R.sub(R.mul(a, b), R.one()))) {
                    inv = true;
                    break;
                }
            }
            if (!inv) maximal = false;
        }
        p.is_maximal = maximal;
    }

    bool regular = false;
    I.elems.for_each([&](std::size_t x) {
        if (!regular && !R.is_zero_divisor(static_cast<code_t>(x))) regular = true;
    });
    p.is_regular = regular;
    p.degeneracy_note =
        "finite ring: regular element = unit, so a regular ideal is the unit ideal";

    Bitset rad(n);
    for (code_t x = 0; x < n; ++x) {
        code_t acc = R.one();
        for (code_t k = 0; k < n; ++k) {
            acc = R.mul(acc, x);
            if (I.elems.test(acc)) {
                rad.set(x);
                break;
            }
        }
    }
    p.radical = Ideal{I.ring, minimal_generators(R, rad), std::move(rad)};
    return p;
}

SpecResult enumerate_spec(const Ring& R) {
    SpecResult out;
    const code_t n = R.order();
    if (n <= 1) return out;  // the zero ring has empty spectrum

    RingPtr self = R.shared_from_this();

    // Jacobson radical: {x : 1 + x*r is a unit for all r}
    Bitset jac(n);
    for (code_t x = 0; x < n; ++x) {
        bool ok = true;
        for (code_t r = 0; r < n && ok; ++r)
            if (!R.is_unit(R.add(R.one(), R.mul(x, r)))) ok = false;
        if (ok) jac.set(x);
    }

    RingPtr Rbar = make_quotient(self, jac.to_codes());
    const Ring& Q = *Rbar;

    // idempotents of R/J; primitive = minimal nonzero in the order e <= f iff ef = e
    std::vector<code_t> idem;
    for (code_t e = 0; e < Q.order(); ++e)
        if (Q.mul(e, e) == e && e != 0) idem.push_back(e);

    std::vector<code_t> primitive;
    for (code_t e : idem) {
        bool minimal = true;
        for (code_t f : idem) {
            if (f == e) continue;
            if (Q.mul(e, f) == f) {  // f <= e and f nonzero
                minimal = false;
                break;
            }
        }
        if (minimal) primitive.push_back(e);
    }

    for (code_t e : primitive) {
        // maximal ideal of R/J associated to e: Ann(e)
        Bitset melems(n);
        for (code_t x = 0; x < n; ++x)
            if (Q.mul(Q.class_of(x), e) == 0) melems.set(x);
        Ideal p{self, minimal_generators(R, melems), melems};
        out.primes.push_back(PrimeIdeal{std::move(p), true});
    }

    std::sort(out.primes.begin(), out.primes.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        return ideal_set_less(a.ideal.elems, b.ideal.elems);
    });
    out.discrete = true;
    return out;
}

std::vector<Ideal> variety(const SpecResult& spec, const Ideal& I) {
    std::vector<Ideal> v;
    for (const auto& p : spec.primes)
        if (I.elems.is_subset_of(p.ideal.elems)) v.push_back(p.ideal);
    return v;
}

std::vector<Bitset> all_ideal_sets(const Ring& R) {
    const code_t n = R.order();
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> work;

    auto push = [&](const Bitset& b) {
        if (seen.insert(b).second) work.push_back(b);
    };

    Bitset zero(n);
    zero.set(0);
    push(zero);
    for (code_t a = 0; a < n; ++a) {
        Bitset pa = principal_span(R, a);
        push(pa);
        for (code_t b = a + 1; b < n; ++b) push(set_sum(R, pa, principal_span(R, b)));
    }

    // saturate under pairwise sums; every ideal is a finite sum of principal
    // ideals, so this reaches the whole lattice
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Bitset s = set_sum(R, work[i], work[j]);
            push(s);
        }
    }

    std::vector<Bitset> out(work.begin(), work.end());
    std::sort(out.begin(), out.end(), ideal_set_less);
    return out;
}

bool ideal_set_less(const Bitset& a, const Bitset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    auto va = a.to_codes(), vb = b.to_codes();
    return va < vb;
}

std::vector<code_t> minimal_generators(const Ring& R, const Bitset& elems) {
    std::vector<code_t> gens;
    Bitset span(R.order());
    span.set(0);
    if (elems == span) return gens;
    for (;;) {
        code_t next = static_cast<code_t>(-1);
        // prefer a generator whose principal span is largest (greedy), with
        // code order as the tiebreak to stay deterministic
        std::size_t best = 0;
        std::vector<code_t> candidates = elems.to_codes();
        for (code_t c : candidates) {
            if (span.test(c)) continue;
            std::size_t sz = principal_span(R, c).count();
            if (sz > best) {
                best = sz;
                next = c;
            }
        }
        if (next == static_cast<code_t>(-1)) break;
        gens.push_back(next);
        span = set_sum(R, span, principal_span(R, next));
        if (span == elems) break;
    }
    return gens;
}

}  // namespace biamalg
