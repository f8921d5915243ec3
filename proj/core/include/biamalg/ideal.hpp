#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biamalg/ring.hpp"

namespace biamalg {

/// An ideal of a fixed finite ring: a generator list plus the fully
/// enumerated element set.
struct Ideal {
    RingPtr ring;
    std::vector<code_t> gens;
    Bitset elems;

    std::size_t size() const { return elems.count(); }
    bool contains(code_t x) const { return elems.test(x); }
    bool is_subset_of(const Ideal& other) const { return elems.is_subset_of(other.elems); }
    bool operator==(const Ideal& o) const { return ring == o.ring && elems == o.elems; }

    std::string str() const;
};

/// Element set of the principal ideal (x): exactly the multiples r*x, which
/// are already closed under addition and scaling.
Bitset principal_span(const Ring& R, code_t x);

/// Sum of two additively closed sets: {i + j}.
Bitset set_sum(const Ring& R, const Bitset& I, const Bitset& J);

/// Smallest ideal containing gens.
Ideal ideal_span(RingPtr R, std::vector<code_t> gens);

/// Wrap an already-enumerated element set; verifies it is an ideal.
Ideal ideal_from_set(RingPtr R, const Bitset& elems);

Ideal zero_ideal(RingPtr R);
Ideal unit_ideal(RingPtr R);

bool is_ideal_set(const Ring& R, const Bitset& elems);

enum class IdealOp { Sum, Product, Intersect, Colon, Annihilator, Power };

/// Binary/unary ideal arithmetic. J is ignored for Annihilator(J -> uses I)
/// semantics: annihilator(J) passes J as I. Power uses the exponent argument.
Ideal ideal_arith(IdealOp op, const Ideal& I, const Ideal* J = nullptr, unsigned power = 0);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_colon(const Ideal& I, const Ideal& J);  // {x : xJ <= I}
Ideal ideal_annihilator(const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned k);

/// Scale an ideal by a ring element: {x*i}, again an ideal.
Ideal ideal_scale(const Ideal& I, code_t x);

struct IdealPredicates {
    bool is_proper = false;
    bool is_prime = false;
    bool is_maximal = false;
    bool is_regular = false;
    Ideal radical;
    /// Finite rings force regular ideal <=> unit ideal; surfaced, not hidden.
    std::string degeneracy_note;
};
IdealPredicates ideal_predicates(const Ideal& I);

struct PrimeIdeal {
    Ideal ideal;
    bool maximal = false;
};

struct SpecResult {
    std::vector<PrimeIdeal> primes;  // sorted canonically
    /// Finite rings have discrete specialization order: every prime maximal.
    bool discrete = true;
};

/// Exact Spec(R) via primitive idempotents of R/Jac(R).
SpecResult enumerate_spec(const Ring& R);

/// Primes containing I.
std::vector<Ideal> variety(const SpecResult& spec, const Ideal& I);

/// Every ideal of R, found by saturating the <=2-generator spans under ideal
/// sums. Exponential-free at desk scale; used for theorem sweeps.
std::vector<Bitset> all_ideal_sets(const Ring& R);

/// Canonical sort key so ideal lists compare deterministically.
bool ideal_set_less(const Bitset& a, const Bitset& b);

/// A small generating set for an enumerated ideal (greedy).
std::vector<code_t> minimal_generators(const Ring& R, const Bitset& elems);

}  // namespace biamalg
