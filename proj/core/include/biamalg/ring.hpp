#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "biamalg/bitset.hpp"

namespace biamalg {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Canonical element code: every ring encodes its elements as 0..order-1,
/// with 0 always the additive identity.
using code_t = std::uint32_t;

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when elements of two distinct rings are combined.
class RingMismatch : public RingError {
public:
    using RingError::RingError;
};

// ---------------------------------------------------------------------------
// Descriptors: the structural recipe a ring is built from.
// ---------------------------------------------------------------------------

struct ZmodDesc {
    std::uint64_t modulus;
};

struct GaloisDesc {
    std::uint64_t p;  // characteristic, prime
    unsigned k;       // extension degree, order = p^k
};

/// base[var]/(modulus), modulus monic with constant-first coefficient codes.
struct PolyQuotDesc {
    RingPtr base;
    std::vector<code_t> modulus;
    std::string var = "x";
};

struct ProductDesc {
    RingPtr left;
    RingPtr right;
};

/// Quotient by a two-sided ideal given as its full (sorted) element set.
/// Element codes index the coset representatives, minimum base code first.
struct QuotientDesc {
    RingPtr base;
    std::vector<code_t> ideal_elems;
};

/// Unital subring given by its full (sorted) element set in the base ring.
struct SubringDesc {
    RingPtr base;
    std::vector<code_t> elems;
};

using RingDescriptor =
    std::variant<ZmodDesc, GaloisDesc, PolyQuotDesc, ProductDesc, QuotientDesc, SubringDesc>;

/// Process-wide construction limits. max_order rejects constructions outright,
/// table_cap bounds the orders for which full operation tables are cached;
/// larger rings evaluate operations structurally from the descriptor.
struct RingConfig {
    code_t max_order = 4096;
    code_t table_cap = 4096;
};
RingConfig& ring_config();

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

class Ring : public std::enable_shared_from_this<Ring> {
public:
    /// Build a ring from a descriptor; validates identities and closure and
    /// caches operation tables when order <= ring_config().table_cap.
    static RingPtr make(RingDescriptor desc);

    code_t order() const { return order_; }
    code_t zero() const { return 0; }
    code_t one() const { return one_; }

    code_t add(code_t a, code_t b) const {
        return add_tab_.empty() ? add_structural(a, b) : add_tab_[std::size_t{a} * order_ + b];
    }
    code_t mul(code_t a, code_t b) const {
        return mul_tab_.empty() ? mul_structural(a, b) : mul_tab_[std::size_t{a} * order_ + b];
    }
    code_t neg(code_t a) const { return neg_tab_[a]; }
    code_t sub(code_t a, code_t b) const { return add(a, neg(b)); }
    code_t pow(code_t a, std::uint64_t e) const;

    bool is_unit(code_t a) const { return units_.test(a); }
    const Bitset& units() const { return units_; }

    /// True when some y != 0 has a*y = 0. In a nonzero ring 0 counts.
    bool is_zero_divisor(code_t a) const;
    bool is_nilpotent(code_t a) const;
    bool is_regular_elem(code_t a) const { return !is_zero_divisor(a); }

    const RingDescriptor& descriptor() const { return desc_; }
    const std::string& name() const { return name_; }
    std::string element_str(code_t a) const;

    bool has_tables() const { return !add_tab_.empty(); }

    /// Structural evaluation, independent of the cached tables.
    code_t add_structural(code_t a, code_t b) const;
    code_t mul_structural(code_t a, code_t b) const;

    // --- descriptor-specific views -----------------------------------------

    // product: code = left_code * |right| + right_code
    code_t product_pair(code_t l, code_t r) const { return l * right_order_ + r; }
    code_t product_left(code_t x) const { return x / right_order_; }
    code_t product_right(code_t x) const { return x % right_order_; }

    // quotient
    code_t class_of(code_t base_code) const { return coset_of_[base_code]; }
    code_t rep_of(code_t q) const { return reps_[q]; }

    // subring
    code_t embed(code_t x) const { return sub_elems_[x]; }
    std::optional<code_t> locate(code_t base_code) const;

    // poly-quot / galois
    const RingPtr& poly_base() const { return poly_base_; }
    unsigned poly_degree() const { return poly_deg_; }
    std::vector<code_t> poly_digits(code_t a) const;
    code_t poly_encode(const std::vector<code_t>& digits) const;

private:
    Ring() = default;
    void init_zmod(const ZmodDesc&);
    void init_galois(const GaloisDesc&);
    void init_polyquot(RingPtr base, std::vector<code_t> modulus, std::string var);
    void init_product(const ProductDesc&);
    void init_quotient(const QuotientDesc&);
    void init_subring(const SubringDesc&);
    void finalize();  // tables, neg table, units, identity checks
    code_t neg_structural(code_t a) const;

    enum class Kind { Zmod, Galois, PolyQuot, Product, Quotient, Subring };

    RingDescriptor desc_;
    Kind kind_ = Kind::Zmod;
    code_t order_ = 0;
    code_t one_ = 0;
    std::string name_;

    std::vector<code_t> add_tab_, mul_tab_, neg_tab_;
    Bitset units_;

    // zmod
    std::uint64_t modulus_ = 0;
    // polyquot / galois
    RingPtr poly_base_;
    std::vector<code_t> poly_mod_;  // monic, constant-first, length deg+1
    unsigned poly_deg_ = 0;
    std::string poly_var_;
    // product
    RingPtr left_, right_;
    code_t right_order_ = 0;
    // quotient
    RingPtr quot_base_;
    std::vector<code_t> reps_;
    std::vector<code_t> coset_of_;
    // subring
    RingPtr sub_base_;
    std::vector<code_t> sub_elems_;
    std::vector<code_t> sub_index_;  // base code -> subring code, -1 outside
};

// Convenience constructors.
RingPtr make_zmod(std::uint64_t n);
RingPtr make_galois(std::uint64_t p, unsigned k);
RingPtr make_poly_quot(RingPtr base, std::vector<code_t> monic_modulus, std::string var = "x");
RingPtr make_product(RingPtr left, RingPtr right);
RingPtr make_quotient(RingPtr base, const std::vector<code_t>& ideal_elems);
RingPtr make_subring(RingPtr base, std::vector<code_t> elems);

// ---------------------------------------------------------------------------
// Element: a (ring, code) value with closed arithmetic.
// ---------------------------------------------------------------------------

struct Element {
    RingPtr ring;
    code_t code = 0;

    Element() = default;
    Element(RingPtr r, code_t c) : ring(std::move(r)), code(c) {
        if (code >= ring->order()) throw RingError("element code out of range");
    }

    friend Element operator+(const Element& a, const Element& b) {
        check_same(a, b);
        return {a.ring, a.ring->add(a.code, b.code)};
    }
    friend Element operator-(const Element& a, const Element& b) {
        check_same(a, b);
        return {a.ring, a.ring->sub(a.code, b.code)};
    }
    friend Element operator*(const Element& a, const Element& b) {
        check_same(a, b);
        return {a.ring, a.ring->mul(a.code, b.code)};
    }
    Element operator-() const { return {ring, ring->neg(code)}; }
    Element pow(std::uint64_t e) const { return {ring, ring->pow(code, e)}; }

    bool operator==(const Element& o) const { return ring == o.ring && code == o.code; }

    static void check_same(const Element& a, const Element& b) {
        if (a.ring != b.ring) throw RingMismatch("elements belong to different rings");
    }
};

struct ElementClass {
    bool unit = false;
    bool zero_divisor = false;
    bool nilpotent = false;
    bool regular = false;
};
ElementClass classify_element(const Ring& R, code_t x);

/// Exhaustively computed ring-wide data. Reg is derived from the zero-divisor
/// scan, independently of the unit scan, so Reg == units stays a checkable
/// finite-ring fact rather than an assumption.
struct RingInvariants {
    Bitset units;
    Bitset regulars;
    Bitset nilradical;
    Bitset jacobson;
    Bitset idempotents;
    bool is_local = false;
    bool is_field = false;
    std::optional<Bitset> maximal_ideal;  // the non-units, when local
};
RingInvariants ring_invariants(const Ring& R);

/// Full exhaustive ring-axiom verification (commutativity, associativity,
/// distributivity, identities, inverses). O(order^3); callers gate by order.
void verify_ring_axioms(const Ring& R);

}  // namespace biamalg
