#pragma once

#include <string>
#include <vector>

#include "biamalg/hom.hpp"
#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

/// Compatibility failure f^-1(b) != g^-1(c), with a witness element of A that
/// lands in exactly one of the two contractions.
class CompatibilityError : public RingError {
public:
    CompatibilityError(std::string msg, code_t witness)
        : RingError(std::move(msg)), witness_code(witness) {}
    code_t witness_code;
};

/// The validated data of a bi-amalgamated algebra: two homomorphisms
/// f : A -> B, g : A -> C and compatible ideals b of B, c of C, together with
/// the constructed ring R = {(f(a)+b, g(a)+c)} inside B x C and every
/// canonical map of its pullback presentation.
struct BiAmalg {
    RingPtr A, B, C;
    RingHom f, g;
    Ideal b, c;   // ideals of B and C
    Ideal i0;     // f^-1(b) = g^-1(c), ideal of A
    Ideal k;      // Ker(f) /\ Ker(g), ideal of A

    RingPtr BxC;
    RingPtr R;          // subring of BxC
    RingPtr A_mod_i0;
    RingPtr A_mod_k;
    RingPtr B_mod_b;
    RingPtr C_mod_c;
    RingPtr BbxCc;      // B/b x C/c

    RingHom incl;    // R -> B x C
    RingHom pi;      // B x C -> B/b x C/c
    RingHom i_fg;    // A/i0 -> B/b x C/c (injective)
    RingHom p;       // R -> A/i0 (surjective, kernel b x c)
    RingHom iota;    // A/k -> R (injective)
    RingHom proj_B;  // R -> B
    RingHom proj_C;  // R -> C

    Ideal bxc;  // b x c as an ideal of R

    std::size_t order() const { return R->order(); }

    /// R-code of the element (f(a)+b', g(a)+c'); throws if absent (bug).
    code_t element(code_t beta, code_t gamma) const;
};

/// Construct and validate the bi-amalgamation. Checks f^-1(b) = g^-1(c)
/// (CompatibilityError with witness otherwise), enumerates R, verifies the
/// subring property, |R| = |A/i0|*|b|*|c|, and builds all canonical maps with
/// their exhaustive verification.
BiAmalg biamalg_new(const RingHom& f, const RingHom& g, Ideal b, Ideal c);

/// a bowtie (b,c) = {(f(p)+b', g(p)+c') : p in a}: an ideal of R containing
/// b x c. Verified against the size identity |a+i0|/|i0| * |b| * |c|.
Ideal ideal_bowtie(const BiAmalg& inst, const Ideal& a);

/// j^sharp_B = {r in R : first coordinate of r lies in j}; computed both by
/// direct scan and as the contraction of j x C along the inclusion, compared.
Ideal sharp_contraction_B(const BiAmalg& inst, const Ideal& j);
Ideal sharp_contraction_C(const BiAmalg& inst, const Ideal& jprime);

struct CanonicalMapReport {
    bool p_surjective = false;
    bool p_kernel_is_bxc = false;
    bool iota_injective = false;
    bool i_fg_injective = false;
    bool ok() const { return p_surjective && p_kernel_is_bxc && iota_injective && i_fg_injective; }
};
CanonicalMapReport canonical_maps_report(const BiAmalg& inst);

struct FiberProductReport {
    bool set_equality = false;      // R = pi^-1(i_fg(A/i0)) elementwise
    bool diagram_commutes = false;  // i_fg . p = pi . incl
    bool size_identity = false;     // |R| = |A/i0| * |b| * |c|
    std::size_t r_order = 0;
    std::size_t expected_order = 0;
    bool ok() const { return set_equality && diagram_commutes && size_identity; }
};
FiberProductReport verify_fiber_product(const BiAmalg& inst);

/// The classical amalgamation A join^f b realized as a bi-amalgamation in
/// both coordinate conventions, with the explicit swap isomorphism between
/// them. `classical` (g = identity placed first) has element set literally
/// {(a, f(a)+b)} inside A x B; `b_first` is its coordinate swap.
struct Amalgamation {
    BiAmalg b_first;      // A join^{f,Id}(b, i0), subring of B x A
    BiAmalg classical;    // A join^{Id,f}(i0, b), subring of A x B
    RingHom swap_iso;     // b_first.R -> classical.R, verified bijective
    bool classical_set_matches = false;  // classical.R == {(a, f(a)+b)} directly
};
Amalgamation amalgamation_special(const RingHom& f, const Ideal& b);

/// Amalgamated duplication A join a = amalgamation along the identity.
Amalgamation duplication(RingPtr A, const Ideal& a);

/// Convenience: the bi-amalgamation of the duplication in the usual
/// symmetric convention (f = g = id, b = c = a), subring of A x A.
BiAmalg duplication_instance(RingPtr A, const Ideal& a);

struct ModuleGeneratorsReport {
    std::vector<code_t> r_generators;    // R-codes: (1,1), (b_i,0), (0,c_j)
    bool r_generates = false;            // they generate R as an A/k-module
    std::vector<code_t> bxc_generators;  // BxC-codes: (x_i,0), (0,y_j)
    bool bxc_generates = false;          // they generate BxC as an R-module
};
ModuleGeneratorsReport module_generators(const BiAmalg& inst);

/// Localized data of the instance at a prime p of A containing i0:
/// S_p = f(A\p)+b, T_p = g(A\p)+c, the three localizations, the induced
/// homomorphisms and the extended ideals, plus the contraction identity
/// f_p^-1(b B_Sp) = g_p^-1(c C_Tp) = i0 A_p.
struct LocalizedData {
    Ideal prime;
    MultSet S_p, T_p;
    Localization A_p, B_S, C_T;
    RingHom f_p, g_p;
    Ideal b_ext;   // b B_Sp in B_S
    Ideal c_ext;   // c C_Tp in C_T
    Ideal i0_ext;  // i0 A_p in A_p
    bool contraction_identity = false;
};
LocalizedData induced_localized_data(const BiAmalg& inst, const Ideal& p);

}  // namespace biamalg
