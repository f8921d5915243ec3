#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biamalg/biamalg.hpp"

namespace biamalg {

// ---------------------------------------------------------------------------
// Polynomials over a finite ring (dense, constant term first)
// ---------------------------------------------------------------------------

struct Polynomial {
    RingPtr ring;
    std::vector<code_t> coeffs;  // trailing zeros trimmed

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
};

Polynomial make_polynomial(RingPtr R, std::vector<code_t> coeffs);
Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);

/// c(P): the ideal generated by the coefficients.
Ideal content_ideal(const Polynomial& P);

// ---------------------------------------------------------------------------
// Property verdicts
// ---------------------------------------------------------------------------

struct PropertyVerdict {
    std::string property;
    bool verdict = false;
    std::string witness;          // replayable description, set on failure
    std::string degeneracy_note;  // set when finite-ring theory forces the verdict
};

// ---------------------------------------------------------------------------
// Gaussian
// ---------------------------------------------------------------------------

/// One failing pair of the local characterization, when any:
/// clause 1: (x,y)^2 is neither (x^2) nor (y^2)
/// clause 2: (x,y)^2 = (x^2), xy = 0, but y^2 != 0 (or symmetrically).
struct GaussianScan {
    bool ok = true;
    code_t x = 0, y = 0;
    int clause = 0;
};

/// The square-ideal test on every unordered element pair of a local ring.
GaussianScan local_gaussian_pair_scan(const Ring& R);

/// Gaussian decision. Local rings: pair scan. Otherwise localize at each
/// maximal ideal and recurse; the witness names the localization.
PropertyVerdict is_gaussian(const Ring& R);

/// Definitional check for a single polynomial: c(Pg) = c(P)c(g) for every g
/// of degree <= D. The truncation at D is explicit; it is not a complete
/// Gaussian test on its own.
PropertyVerdict gauss_polynomial_oracle(const Polynomial& P, unsigned degree_bound);

/// Bounded-degree definitional Gaussian oracle for a whole ring: every f of
/// degree <= D against every g of degree <= D. Enumerates one representative
/// per unit-scaling orbit on each side (contents are invariant under unit
/// scaling of either factor). Requires order <= 64.
PropertyVerdict gaussian_content_oracle(const Ring& R, unsigned degree_bound = 3);

// ---------------------------------------------------------------------------
// Pruefer and invertibility
// ---------------------------------------------------------------------------

/// Invertibility of an ideal: search for a submodule F (cyclic-generated,
/// plus the whole ring) with I*F = R. In a finite ring Q = R, so invertible
/// ideals are exactly the unit ideal; the verdict says so explicitly.
struct InvertibilityResult {
    PropertyVerdict verdict;
    std::optional<Ideal> inverse;  // the F found, when invertible
};
InvertibilityResult is_invertible(const Ideal& I);

/// Every ideal generated by <= 3 elements, regularity filter (an ideal is
/// regular iff its generators avoid some maximal ideal jointly fails),
/// invertibility test on the regular ones.
PropertyVerdict is_prufer(const Ring& R);

/// Regular total order property of the pair (R, m): all <=2-generated ideal
/// pairs with at least one regular member have comparable extensions in R_m.
PropertyVerdict regular_total_order(const Ring& R, const Ideal& m);

// ---------------------------------------------------------------------------
// The named conditions of the transfer theorems
// ---------------------------------------------------------------------------

struct ConditionChecks {
    PropertyVerdict star;        // f(pre(Reg(A/i0))) <= Reg(B), likewise g
    PropertyVerdict doublestar;  // f(Reg(A)) <= Reg(B), likewise g
    PropertyVerdict blackstar;   // case-1 data always certifies a zero-divisor
    /// B and C local total quotient rings with maximal ideals b and c: a
    /// sufficient criterion for blackstar, checked as a fast path and then
    /// cross-checked against the literal scan.
    bool fastpath_applies = false;
};
ConditionChecks condition_checks(const BiAmalg& inst);

struct DichotomyResult {
    bool is_zero_divisor = false;
    bool case1 = false;  // p(r) is a zero-divisor of A/i0
    bool case2 = false;  // some (b',c') != 0 kills both coordinates
    std::optional<std::pair<code_t, code_t>> case2_witness;  // codes in B and C
    bool dichotomy_holds = false;  // zero-divisor => case1 or case2
};
DichotomyResult zero_divisor_dichotomy(const BiAmalg& inst, code_t r);

/// In a Gaussian local ring, an ideal squares to zero iff every element does.
struct IdquadReport {
    bool ring_gaussian = false;
    bool ideal_square_zero = false;
    bool elementwise_squares_zero = false;
    bool equivalence_holds = false;
};
IdquadReport lemma_idquad_check(const Ring& R, const Ideal& I);

struct TotalFractionsReport {
    PropertyVerdict r_total_ring_of_fractions;  // every non-unit a zero-divisor
    bool a_mod_k_total = false;
    bool b_torsion = false;  // every element of b killed by a regular class of A/k
    bool c_torsion = false;
    bool b_in_jacobson = false;
    bool c_in_jacobson = false;
};
TotalFractionsReport total_quotient_and_torsion(const BiAmalg& inst);

/// The subring f(A) + b of B.
RingPtr image_plus_ideal_subring(const RingHom& f, const Ideal& b);

}  // namespace biamalg
