#include "biamalg/ring.hpp"

#include <algorithm>
#include <sstream>

namespace biamalg {

RingConfig& ring_config() {
    static RingConfig cfg;
    return cfg;
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomial helpers over an arbitrary finite base ring -----------
// Coefficients are base-ring codes, constant term first, no implicit trimming.

std::vector<code_t> poly_trim(std::vector<code_t> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<code_t> poly_mul(const Ring& B, const std::vector<code_t>& a,
                             const std::vector<code_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<code_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = B.add(r[i + j], B.mul(a[i], b[j]));
    }
    return r;
}

// Reduce modulo a monic modulus; division-free since the leading coefficient
// is the base one.
std::vector<code_t> poly_mod_monic(const Ring& B, std::vector<code_t> a,
                                   const std::vector<code_t>& m) {
    const std::size_t deg_m = m.size() - 1;
    a = poly_trim(std::move(a));
    while (a.size() > deg_m) {
        code_t lead = a.back();
        std::size_t shift = a.size() - 1 - deg_m;
        for (std::size_t i = 0; i < deg_m; ++i) {
            a[shift + i] = B.sub(a[shift + i], B.mul(lead, m[i]));
        }
        a.pop_back();
        a = poly_trim(std::move(a));
    }
    return a;
}

// Irreducibility over a prime field by trial division against every monic
// divisor of degree 1..deg/2. Desk-scale degrees only.
bool monic_irreducible_over_fp(const Ring& Fp, const std::vector<code_t>& m) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= Fp.order();
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            std::vector<code_t> div(d + 1, 0);
            std::uint64_t t = tail;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<code_t>(t % Fp.order());
                t /= Fp.order();
            }
            div[d] = Fp.one();
            if (poly_mod_monic(Fp, m, div).empty()) return false;
        }
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

RingPtr Ring::make(RingDescriptor desc) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->desc_ = std::move(desc);
    std::visit(
        [&](auto&& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ZmodDesc>) r->init_zmod(d);
            else if constexpr (std::is_same_v<T, GaloisDesc>) r->init_galois(d);
            else if constexpr (std::is_same_v<T, PolyQuotDesc>) r->init_polyquot(d.base, d.modulus, d.var);
            else if constexpr (std::is_same_v<T, ProductDesc>) r->init_product(d);
            else if constexpr (std::is_same_v<T, QuotientDesc>) r->init_quotient(d);
            else r->init_subring(d);
        },
        r->desc_);
    r->finalize();
    return r;
}

void Ring::init_zmod(const ZmodDesc& d) {
    if (d.modulus == 0) throw RingError("Z/0 is not a finite ring");
    if (d.modulus > ring_config().max_order)
        throw RingError("order cap exceeded: Z/" + std::to_string(d.modulus));
    kind_ = Kind::Zmod;
    modulus_ = d.modulus;
    order_ = static_cast<code_t>(d.modulus);
    one_ = order_ == 1 ? 0 : 1;
    name_ = "Z/" + std::to_string(d.modulus);
}

void Ring::init_galois(const GaloisDesc& d) {
    if (!is_prime_u64(d.p)) throw RingError("GF characteristic must be prime");
    if (d.k == 0) throw RingError("GF degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < d.k; ++i) {
        q *= d.p;
        if (q > ring_config().max_order) throw RingError("order cap exceeded for Galois field");
    }
    RingPtr fp = make_zmod(d.p);
    if (d.k == 1) {
        // prime field: behave exactly like Z/p
        kind_ = Kind::Zmod;
        modulus_ = d.p;
        order_ = static_cast<code_t>(d.p);
        one_ = 1;
        name_ = "GF(" + std::to_string(d.p) + ")";
        return;
    }
    // deterministic modulus: first irreducible monic polynomial in code order
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d.k; ++i) count *= d.p;
    std::vector<code_t> mod;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
        std::vector<code_t> cand(d.k + 1, 0);
        std::uint64_t t = tail;
        for (unsigned i = 0; i < d.k; ++i) {
            cand[i] = static_cast<code_t>(t % d.p);
            t /= d.p;
        }
        cand[d.k] = 1;
        if (monic_irreducible_over_fp(*fp, cand)) {
            mod = cand;
            break;
        }
    }
    if (mod.empty()) throw RingError("no irreducible modulus found");  // cannot happen
    init_polyquot(fp, mod, "t");
    kind_ = Kind::Galois;
    name_ = "GF(" + std::to_string(q) + ")";
}

void Ring::init_polyquot(RingPtr base, std::vector<code_t> modulus, std::string var) {
    if (!base) throw RingError("poly-quot base missing");
    modulus = poly_trim(std::move(modulus));
    if (modulus.size() < 2) throw RingError("poly-quot modulus must have degree >= 1");
    if (modulus.back() != base->one())
        throw RingError("poly-quot modulus must be monic");
    for (code_t c : modulus)
        if (c >= base->order()) throw RingError("modulus coefficient out of range");

    poly_base_ = std::move(base);
    poly_mod_ = std::move(modulus);
    poly_deg_ = static_cast<unsigned>(poly_mod_.size() - 1);
    poly_var_ = std::move(var);
    kind_ = Kind::PolyQuot;

    std::uint64_t n = 1;
    for (unsigned i = 0; i < poly_deg_; ++i) {
        n *= poly_base_->order();
        if (n > ring_config().max_order) throw RingError("order cap exceeded for poly-quot");
    }
    order_ = static_cast<code_t>(n);

    std::vector<code_t> one_digits(poly_deg_, 0);
    one_digits[0] = poly_base_->one();
    one_ = poly_encode(one_digits);

    std::ostringstream os;
    os << poly_base_->name() << "[" << poly_var_ << "]/(";
    bool first = true;
    for (std::size_t i = poly_mod_.size(); i-- > 0;) {
        if (poly_mod_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) os << poly_mod_[i];
        else {
            if (poly_mod_[i] != poly_base_->one()) os << poly_mod_[i] << "*";
            os << poly_var_;
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    name_ = os.str();
}

void Ring::init_product(const ProductDesc& d) {
    if (!d.left || !d.right) throw RingError("product factor missing");
    kind_ = Kind::Product;
    left_ = d.left;
    right_ = d.right;
    right_order_ = right_->order();
    std::uint64_t n = std::uint64_t{left_->order()} * right_->order();
    if (n > ring_config().max_order) throw RingError("order cap exceeded for product");
    order_ = static_cast<code_t>(n);
    one_ = product_pair(left_->one(), right_->one());
    name_ = left_->name() + " x " + right_->name();
}

void Ring::init_quotient(const QuotientDesc& d) {
    if (!d.base) throw RingError("quotient base missing");
    kind_ = Kind::Quotient;
    quot_base_ = d.base;
    const Ring& B = *quot_base_;

    Bitset ideal(B.order());
    for (code_t e : d.ideal_elems) {
        if (e >= B.order()) throw RingError("ideal element out of range");
        ideal.set(e);
    }
    if (!ideal.test(0)) throw RingError("quotient ideal must contain 0");
    // closure sanity: additive and multiplicative absorption
    std::vector<code_t> elems = ideal.to_codes();
    for (code_t x : elems) {
        for (code_t y : elems)
            if (!ideal.test(B.add(x, y))) throw RingError("quotient set not additively closed");
        for (code_t r = 0; r < B.order(); ++r)
            if (!ideal.test(B.mul(r, x))) throw RingError("quotient set not an ideal");
    }

    // coset representatives: minimum base code per coset
    coset_of_.assign(B.order(), static_cast<code_t>(-1));
    for (code_t x = 0; x < B.order(); ++x) {
        if (coset_of_[x] != static_cast<code_t>(-1)) continue;
        code_t idx = static_cast<code_t>(reps_.size());
        reps_.push_back(x);  // x is minimal in its coset by scan order
        for (code_t e : elems) coset_of_[B.add(x, e)] = idx;
    }
    order_ = static_cast<code_t>(reps_.size());
    one_ = coset_of_[B.one()];
    name_ = B.name() + "/(" + std::to_string(elems.size() > 1 ? elems[1] : 0) +
            (elems.size() > 2 ? ",..." : "") + ")";
}

void Ring::init_subring(const SubringDesc& d) {
    if (!d.base) throw RingError("subring base missing");
    kind_ = Kind::Subring;
    sub_base_ = d.base;
    const Ring& B = *sub_base_;

    sub_elems_ = d.elems;
    std::sort(sub_elems_.begin(), sub_elems_.end());
    sub_elems_.erase(std::unique(sub_elems_.begin(), sub_elems_.end()), sub_elems_.end());
    for (code_t e : sub_elems_)
        if (e >= B.order()) throw RingError("subring element out of range");
    if (sub_elems_.empty() || sub_elems_[0] != 0) throw RingError("subring must contain 0");

    sub_index_.assign(B.order(), static_cast<code_t>(-1));
    for (code_t i = 0; i < sub_elems_.size(); ++i) sub_index_[sub_elems_[i]] = i;

    auto inside = [&](code_t x) { return sub_index_[x] != static_cast<code_t>(-1); };
    if (!inside(B.one())) throw RingError("subring must contain 1");
    for (code_t x : sub_elems_) {
        for (code_t y : sub_elems_) {
            if (!inside(B.add(x, y))) throw RingError("subring not closed under +");
            if (!inside(B.mul(x, y))) throw RingError("subring not closed under *");
        }
    }

    order_ = static_cast<code_t>(sub_elems_.size());
    one_ = sub_index_[B.one()];
    name_ = "sub(" + B.name() + ", n=" + std::to_string(order_) + ")";
}

void Ring::finalize() {
    if (order_ == 0) throw RingError("empty ring");

    neg_tab_.resize(order_);
    for (code_t a = 0; a < order_; ++a) {
        code_t n = neg_structural(a);
        if (add_structural(a, n) != 0) throw RingError("additive inverse failed");
        neg_tab_[a] = n;
    }

    if (order_ <= ring_config().table_cap) {
        const std::size_t n = order_;
        add_tab_.resize(n * n);
        mul_tab_.resize(n * n);
        bool filled = false;
        if (kind_ == Kind::Product && left_->has_tables() && right_->has_tables()) {
            // componentwise fill straight from the factor tables
            const code_t lo = left_->order(), ro = right_order_;
            for (code_t l1 = 0; l1 < lo; ++l1)
                for (code_t r1 = 0; r1 < ro; ++r1) {
                    std::size_t row = std::size_t{l1} * ro + r1;
                    for (code_t l2 = 0; l2 < lo; ++l2)
                        for (code_t r2 = 0; r2 < ro; ++r2) {
                            std::size_t col = std::size_t{l2} * ro + r2;
                            add_tab_[row * n + col] =
                                left_->add(l1, l2) * ro + right_->add(r1, r2);
                            mul_tab_[row * n + col] =
                                left_->mul(l1, l2) * ro + right_->mul(r1, r2);
                        }
                }
            filled = true;
        } else if (kind_ == Kind::Quotient && quot_base_->has_tables()) {
            for (code_t a = 0; a < order_; ++a)
                for (code_t b = 0; b < order_; ++b) {
                    add_tab_[std::size_t{a} * n + b] = coset_of_[quot_base_->add(reps_[a], reps_[b])];
                    mul_tab_[std::size_t{a} * n + b] = coset_of_[quot_base_->mul(reps_[a], reps_[b])];
                }
            filled = true;
        } else if (kind_ == Kind::Subring && sub_base_->has_tables()) {
            for (code_t a = 0; a < order_; ++a)
                for (code_t b = 0; b < order_; ++b) {
                    add_tab_[std::size_t{a} * n + b] =
                        sub_index_[sub_base_->add(sub_elems_[a], sub_elems_[b])];
                    mul_tab_[std::size_t{a} * n + b] =
                        sub_index_[sub_base_->mul(sub_elems_[a], sub_elems_[b])];
                }
            filled = true;
        }
        if (!filled) {
            for (code_t a = 0; a < order_; ++a)
                for (code_t b = 0; b < order_; ++b) {
                    add_tab_[std::size_t{a} * n + b] = add_structural(a, b);
                    mul_tab_[std::size_t{a} * n + b] = mul_structural(a, b);
                }
        }
    }

    units_ = Bitset(order_);
    for (code_t a = 0; a < order_; ++a) {
        for (code_t b = 0; b < order_; ++b) {
            if (mul(a, b) == one_) {
                units_.set(a);
                break;
            }
        }
    }

    // identity spot checks
    if (add(0, one_) != one_ || mul(one_, one_) != one_)
        throw RingError("identity verification failed");
    if (order_ > 1 && one_ == 0) throw RingError("0 = 1 in a ring of order > 1");
}

// ---------------------------------------------------------------------------
// structural operations
// ---------------------------------------------------------------------------

code_t Ring::neg_structural(code_t a) const {
    switch (kind_) {
        case Kind::Zmod:
            return a == 0 ? 0 : static_cast<code_t>(modulus_ - a);
        case Kind::Galois:
        case Kind::PolyQuot: {
            const Ring& B = *poly_base_;
            code_t radix = B.order();
            code_t r = 0, mulr = 1, x = a;
            for (unsigned i = 0; i < poly_deg_; ++i) {
                r += B.neg(x % radix) * mulr;
                x /= radix;
                if (i + 1 < poly_deg_) mulr *= radix;
            }
            return r;
        }
        case Kind::Product:
            return product_pair(left_->neg(product_left(a)), right_->neg(product_right(a)));
        case Kind::Quotient:
            return coset_of_[quot_base_->neg(reps_[a])];
        case Kind::Subring:
            return sub_index_[sub_base_->neg(sub_elems_[a])];
    }
    throw RingError("unreachable");
}

code_t Ring::add_structural(code_t a, code_t b) const {
    switch (kind_) {
        case Kind::Zmod:
            return static_cast<code_t>((std::uint64_t{a} + b) % modulus_);
        case Kind::Galois:
        case Kind::PolyQuot: {
            const Ring& B = *poly_base_;
            code_t radix = B.order();
            code_t r = 0, mulr = 1, x = a, y = b;
            for (unsigned i = 0; i < poly_deg_; ++i) {
                r += B.add(x % radix, y % radix) * mulr;
                x /= radix;
                y /= radix;
                if (i + 1 < poly_deg_) mulr *= radix;
            }
            return r;
        }
        case Kind::Product:
            return product_pair(left_->add(product_left(a), product_left(b)),
                                right_->add(product_right(a), product_right(b)));
        case Kind::Quotient:
            return coset_of_[quot_base_->add(reps_[a], reps_[b])];
        case Kind::Subring:
            return sub_index_[sub_base_->add(sub_elems_[a], sub_elems_[b])];
    }
    throw RingError("unreachable");
}

code_t Ring::mul_structural(code_t a, code_t b) const {
    switch (kind_) {
        case Kind::Zmod:
            return static_cast<code_t>((std::uint64_t{a} * b) % modulus_);
        case Kind::Galois:
        case Kind::PolyQuot: {
            const Ring& B = *poly_base_;
            std::vector<code_t> pa = poly_digits(a), pb = poly_digits(b);
            std::vector<code_t> prod = poly_mod_monic(B, poly_mul(B, pa, pb), poly_mod_);
            prod.resize(poly_deg_, 0);
            return poly_encode(prod);
        }
        case Kind::Product:
            return product_pair(left_->mul(product_left(a), product_left(b)),
                                right_->mul(product_right(a), product_right(b)));
        case Kind::Quotient:
            return coset_of_[quot_base_->mul(reps_[a], reps_[b])];
        case Kind::Subring:
            return sub_index_[sub_base_->mul(sub_elems_[a], sub_elems_[b])];
    }
    throw RingError("unreachable");
}

code_t Ring::pow(code_t a, std::uint64_t e) const {
    code_t r = one_, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<code_t> Ring::poly_digits(code_t a) const {
    std::vector<code_t> d(poly_deg_);
    code_t radix = poly_base_->order();
    for (unsigned i = 0; i < poly_deg_; ++i) {
        d[i] = a % radix;
        a /= radix;
    }
    return d;
}

code_t Ring::poly_encode(const std::vector<code_t>& digits) const {
    code_t radix = poly_base_->order();
    code_t c = 0, m = 1;
    for (unsigned i = 0; i < poly_deg_; ++i) {
        c += (i < digits.size() ? digits[i] : 0) * m;
        m *= radix;
    }
    return c;
}

std::optional<code_t> Ring::locate(code_t base_code) const {
    code_t idx = sub_index_[base_code];
    if (idx == static_cast<code_t>(-1)) return std::nullopt;
    return idx;
}

// ---------------------------------------------------------------------------
// element classification and printing
// ---------------------------------------------------------------------------

bool Ring::is_zero_divisor(code_t a) const {
    for (code_t y = 1; y < order_; ++y)
        if (mul(a, y) == 0) return true;
    // a = 0 in the zero ring: no nonzero y exists
    return false;
}

bool Ring::is_nilpotent(code_t a) const {
    code_t x = a;
    for (code_t k = 0; k < order_; ++k) {
        if (x == 0) return true;
        x = mul(x, a);
    }
    return x == 0;
}

std::string Ring::element_str(code_t a) const {
    switch (kind_) {
        case Kind::Zmod:
            return std::to_string(a);
        case Kind::Galois:
        case Kind::PolyQuot: {
            auto d = poly_digits(a);
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = d.size(); i-- > 0;) {
                if (d[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0) os << poly_base_->element_str(d[i]);
                else {
                    if (d[i] != poly_base_->one()) os << poly_base_->element_str(d[i]) << "*";
                    os << poly_var_;
                    if (i > 1) os << "^" << i;
                }
            }
            return first ? "0" : os.str();
        }
        case Kind::Product:
            return "(" + left_->element_str(product_left(a)) + "," +
                   right_->element_str(product_right(a)) + ")";
        case Kind::Quotient:
            return quot_base_->element_str(reps_[a]);
        case Kind::Subring:
            return sub_base_->element_str(sub_elems_[a]);
    }
    return std::to_string(a);
}

RingPtr make_zmod(std::uint64_t n) { return Ring::make(ZmodDesc{n}); }
RingPtr make_galois(std::uint64_t p, unsigned k) { return Ring::make(GaloisDesc{p, k}); }
RingPtr make_poly_quot(RingPtr base, std::vector<code_t> m, std::string var) {
    return Ring::make(PolyQuotDesc{std::move(base), std::move(m), std::move(var)});
}
RingPtr make_product(RingPtr l, RingPtr r) { return Ring::make(ProductDesc{std::move(l), std::move(r)}); }
RingPtr make_quotient(RingPtr base, const std::vector<code_t>& ideal_elems) {
    return Ring::make(QuotientDesc{std::move(base), ideal_elems});
}
RingPtr make_subring(RingPtr base, std::vector<code_t> elems) {
    return Ring::make(SubringDesc{std::move(base), std::move(elems)});
}

ElementClass classify_element(const Ring& R, code_t x) {
    ElementClass c;
    c.unit = R.is_unit(x);
    c.zero_divisor = R.is_zero_divisor(x);
    c.nilpotent = R.is_nilpotent(x);
    c.regular = !c.zero_divisor;
    return c;
}

RingInvariants ring_invariants(const Ring& R) {
    const code_t n = R.order();
    RingInvariants inv;
    inv.units = R.units();
    inv.regulars = Bitset(n);
    inv.nilradical = Bitset(n);
    inv.jacobson = Bitset(n);
    inv.idempotents = Bitset(n);

    for (code_t x = 0; x < n; ++x) {
        if (!R.is_zero_divisor(x)) inv.regulars.set(x);
        if (R.is_nilpotent(x)) inv.nilradical.set(x);
        if (R.mul(x, x) == x) inv.idempotents.set(x);
        bool jac = true;
        for (code_t r = 0; r < n && jac; ++r)
            if (!R.is_unit(R.add(R.one(), R.mul(x, r)))) jac = false;
        if (jac) inv.jacobson.set(x);
    }

    // local <=> the non-units are additively closed (they then form the
    // unique maximal ideal)
    bool local = n > 1;
    for (code_t x = 0; x < n && local; ++x) {
        if (R.is_unit(x)) continue;
        for (code_t y = 0; y < n && local; ++y) {
            if (R.is_unit(y)) continue;
            if (R.is_unit(R.add(x, y))) local = false;
        }
    }
    inv.is_local = local;
    if (local) {
        Bitset m(n);
        for (code_t x = 0; x < n; ++x)
            if (!R.is_unit(x)) m.set(x);
        inv.maximal_ideal = m;
    }
    inv.is_field = n > 1 && inv.units.count() == static_cast<std::size_t>(n) - 1;
    return inv;
}

void verify_ring_axioms(const Ring& R) {
    const code_t n = R.order();
    for (code_t a = 0; a < n; ++a) {
        if (R.add(a, 0) != a) throw RingError("additive identity fails");
        if (R.mul(a, R.one()) != a) throw RingError("multiplicative identity fails");
        if (R.add(a, R.neg(a)) != 0) throw RingError("additive inverse fails");
        for (code_t b = 0; b < n; ++b) {
            if (R.add(a, b) != R.add(b, a)) throw RingError("addition not commutative");
            if (R.mul(a, b) != R.mul(b, a)) throw RingError("multiplication not commutative");
            for (code_t c = 0; c < n; ++c) {
                if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
                    throw RingError("addition not associative");
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                    throw RingError("multiplication not associative");
                if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
                    throw RingError("distributivity fails");
            }
        }
    }
}

}  // namespace biamalg
