#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

class HomError : public RingError {
public:
    using RingError::RingError;
};

/// A verified, total, unity-preserving ring homomorphism stored as an image
/// table. Construction always runs the exhaustive additivity /
/// multiplicativity / unity check; an unverified map cannot exist.
struct RingHom {
    RingPtr dom;
    RingPtr cod;
    std::vector<code_t> img;

    code_t operator()(code_t x) const { return img[x]; }

    bool is_injective() const;
    bool is_surjective() const;
};

/// Exhaustive homomorphism verification; throws HomError with a witness on
/// failure.
void verify_hom(const RingHom& h);

RingHom hom_identity(RingPtr R);
RingHom hom_from_table(RingPtr dom, RingPtr cod, std::vector<code_t> img);

/// Canonical map, when one exists between the two rings:
///  - identity when dom == cod,
///  - the coset map when cod is a quotient of dom,
///  - the inclusion when dom is a subring of cod,
///  - reduction x -> x mod n between Z/m and Z/n with n | m.
RingHom hom_canonical(RingPtr dom, RingPtr cod);

/// Total map determined by images of generating elements, closed under ring
/// operations from 0,1 and the given seeds; rejects partial or inconsistent
/// specifications.
RingHom hom_from_generator_images(RingPtr dom, RingPtr cod,
                                  const std::vector<std::pair<code_t, code_t>>& gen_images);

RingHom hom_compose(const RingHom& g, const RingHom& f);  // g after f

RingHom hom_proj_left(RingPtr product);
RingHom hom_proj_right(RingPtr product);
RingHom hom_quotient_map(RingPtr quotient);   // base -> quotient
RingHom hom_subring_inclusion(RingPtr sub);   // subring -> base

struct KernelImage {
    Ideal kernel;
    Bitset image;  // element set of the image subring in the codomain
};
KernelImage hom_kernel_image(const RingHom& h);

Ideal ideal_contract(const RingHom& h, const Ideal& I);  // I in cod -> {a : h(a) in I}
Ideal ideal_extend(const RingHom& h, const Ideal& I);    // span of h(I) in cod

/// Enumerate every ring homomorphism dom -> cod in a deterministic order,
/// up to `cap` many (0 = unbounded). Backtracking over undetermined images
/// with closure propagation.
std::vector<RingHom> enumerate_homs(RingPtr dom, RingPtr cod, std::size_t cap = 0);

// ---------------------------------------------------------------------------
// Multiplicative sets and finite localization
// ---------------------------------------------------------------------------

struct MultSet {
    RingPtr ring;
    Bitset elems;
    bool closure_applied = false;  // set when construction had to close the input
};

/// Builds a multiplicative set: requires 1, closes under multiplication.
MultSet make_mult_set(RingPtr R, const Bitset& elems);
MultSet complement_of_prime(const Ideal& p);

struct Localization {
    RingPtr ring;     // S^-1 R, realized as R / K
    RingHom map;      // canonical R -> S^-1 R
    Ideal kernel;     // K = {x : s*x = 0 for some s in S}
};

/// Finite-ring localization: S^-1 R = R/K with K the saturation kernel.
/// Verifies that every image of S is a unit in the result.
Localization localize_finite(RingPtr R, const MultSet& S);

/// Try to factor phi through a surjective hom q with the same domain:
/// returns psi with psi . q = phi when ker(q) <= ker(phi).
std::optional<RingHom> factor_through(const RingHom& phi, const RingHom& q);

}  // namespace biamalg
