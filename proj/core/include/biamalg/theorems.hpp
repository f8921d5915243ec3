#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "biamalg/classify.hpp"
#include "biamalg/spectra.hpp"

namespace biamalg {

struct ClauseEval {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// One theorem evaluated on one instance (or ring): hypotheses and
/// conclusions broken out per clause so ablation studies can drop individual
/// hypotheses and hunt for counterexamples.
struct TheoremOutcome {
    std::string theorem;
    bool applicable = false;  // all non-ablated hypothesis clauses hold
    bool conclusion = false;
    bool violated = false;    // applicable && !conclusion
    std::vector<ClauseEval> hypotheses;
    std::vector<ClauseEval> conclusions;
    std::vector<std::string> degeneracy_notes;
    std::string witness;
};

struct TheoremInfo {
    std::string id;
    std::string summary;
    bool instance_scope = true;           // otherwise evaluated on single rings
    std::vector<std::string> clause_names;  // ablatable hypothesis clauses
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo* find_theorem(const std::string& id);

/// Evaluates the registered checks on one instance, sharing the expensive
/// intermediates (Pruefer scans, Gaussian scans, spectra) across theorems.
class InstanceEvaluator {
public:
    explicit InstanceEvaluator(const BiAmalg& inst);
    ~InstanceEvaluator();

    /// Ablated clause names (or 1-based indices as strings) are treated as
    /// absent hypotheses.
    TheoremOutcome evaluate(const std::string& theorem_id,
                            const std::set<std::string>& ablated = {});

    const BiAmalg& instance() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Ring-scope checks (quotient stability, Gaussian => Pruefer, finite-ring
/// degeneracy sanity).
TheoremOutcome evaluate_ring_theorem(const std::string& theorem_id, RingPtr R,
                                     const std::set<std::string>& ablated = {});

/// Convenience one-shot instance evaluation.
TheoremOutcome evaluate_theorem(const std::string& theorem_id, const BiAmalg& inst,
                                const std::set<std::string>& ablated = {});

}  // namespace biamalg
