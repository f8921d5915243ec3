#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "biamalg/theorems.hpp"

namespace biamalg {

struct CatalogCaps {
    code_t max_base_order = 16;      // ring-list orders (zmod, Galois, products)
    code_t max_tower_order = 16;     // poly-quot towers
    code_t max_instance_order = 128; // |R| bound for swept instances
    std::size_t max_homs_per_pair = 4;
    std::size_t max_homs_per_domain = 16;
    std::uint64_t seed = 0;
    std::size_t random_hom_trials = 0;  // extension mode for larger hom searches
};

struct CatalogRing {
    RingPtr ring;
    std::string dsl_name;
    std::vector<std::string> decl_lines;  // DSL statements declaring it (and helpers)
    std::vector<std::size_t> deps;        // indices of rings the declaration references
    bool in_ring_list = true;             // mandatory-only components carry false
};

struct CatalogHom {
    RingHom hom;
    std::size_t dom_index = 0, cod_index = 0;
    std::string dsl_spec;  // "canonical" | "id" | "images[...]"
    bool in_hom_list = true;
};

/// Instances are stored as construction recipes and rebuilt on demand; the
/// constructed ring data would dominate memory at catalog scale.
struct InstanceSpec {
    std::size_t f_index = 0, g_index = 0;
    std::vector<code_t> b_gens, c_gens;
    std::size_t r_order = 0;
    std::string label;
    bool mandatory = false;
};

struct Catalog {
    CatalogCaps caps;
    std::vector<CatalogRing> rings;
    std::vector<CatalogHom> homs;
    std::vector<InstanceSpec> instances;

    BiAmalg build(const InstanceSpec& spec) const;
    /// DSL script reconstructing the instance, ending with the given check.
    std::string replay_script(const InstanceSpec& spec, const std::string& check_line) const;
};

/// Deterministic catalog: the ring list, every verified hom between ring-list
/// members (capped, identity and canonical maps first), all compatible ideal
/// pairs within the size cap, plus the named mandatory instances.
Catalog generate_catalog(const CatalogCaps& caps = {});

struct FailureRecord {
    std::string replay;
    std::string witness;
};

struct TheoremSuiteResult {
    std::string theorem;
    std::size_t instances = 0;  // evaluations performed
    std::size_t applicable = 0; // hypotheses held
    std::vector<FailureRecord> failures;
    std::vector<std::string> degeneracy_notes;  // deduplicated, with counts
    double seconds = 0.0;
};

struct SuiteReport {
    CatalogCaps caps;
    std::string version;
    std::vector<TheoremSuiteResult> results;
    double total_seconds = 0.0;

    std::size_t total_failures() const;
    /// Timing fields are the only nondeterministic part; exclude them to
    /// compare runs byte-for-byte.
    std::string to_json(bool include_timing = true) const;
};

/// Runs the selected theorems (all registered when empty) over the catalog.
/// Ablations map theorem id -> dropped hypothesis clauses. jobs = 0 picks a
/// worker count automatically; results merge deterministically by index.
SuiteReport run_suite(const Catalog& cat, const std::vector<std::string>& selection = {},
                      const std::map<std::string, std::set<std::string>>& ablations = {},
                      unsigned jobs = 0);

struct SearchResult {
    bool found = false;
    std::string theorem;
    std::set<std::string> ablated;
    std::size_t r_order = 0;
    std::string replay;
    std::string witness;
    std::size_t searched = 0;  // evaluations performed before success/exhaustion
};

/// Order-ascending search for the smallest catalog instance violating the
/// (possibly ablated) implication; exhaustion is reported, not assumed.
SearchResult counterexample_search(const Catalog& cat, const std::string& theorem,
                                   const std::set<std::string>& ablated = {});

}  // namespace biamalg
