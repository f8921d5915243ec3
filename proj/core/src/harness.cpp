#include "biamalg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace biamalg {

namespace {

constexpr const char* kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string int_list(const std::vector<code_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

struct CatalogBuilder {
    CatalogCaps caps;
    Catalog cat;
    std::unordered_map<std::string, std::size_t> by_name;  // ring name -> index

    std::size_t add_ring(RingPtr r, std::vector<std::string> decl_lines,
                         std::vector<std::size_t> deps, bool listed) {
        auto it = by_name.find(r->name());
        if (it != by_name.end()) return it->second;
        std::size_t idx = cat.rings.size();
        cat.rings.push_back(CatalogRing{std::move(r), "R" + std::to_string(idx),
                                        std::move(decl_lines), std::move(deps), listed});
        // declaration lines carry a placeholder for the final name
        for (auto& line : cat.rings.back().decl_lines) {
            std::size_t pos;
            while ((pos = line.find("$SELF")) != std::string::npos)
                line.replace(pos, 5, cat.rings.back().dsl_name);
        }
        by_name.emplace(cat.rings.back().ring->name(), idx);
        return idx;
    }

    std::size_t add_zmod(std::uint64_t n, bool listed = true) {
        return add_ring(make_zmod(n), {"ring $SELF = Z/" + std::to_string(n) + ";"}, {}, listed);
    }

    std::size_t add_galois(std::uint64_t p, unsigned k) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= p;
        return add_ring(make_galois(p, k), {"ring $SELF = GF(" + std::to_string(q) + ");"}, {},
                        true);
    }

    std::size_t add_tower(std::size_t base_idx, const std::vector<code_t>& modulus,
                          const std::string& var) {
        RingPtr base = cat.rings[base_idx].ring;
        RingPtr r = make_poly_quot(base, modulus, var);
        // poly literal: coefficient codes, highest power first
        std::ostringstream poly;
        bool first = true;
        for (std::size_t i = modulus.size(); i-- > 0;) {
            if (modulus[i] == 0) continue;
            if (!first) poly << "+";
            first = false;
            if (i == 0) poly << modulus[i];
            else {
                if (modulus[i] != base->one()) poly << modulus[i] << "*";
                poly << var;
                if (i > 1) poly << "^" << i;
            }
        }
        return add_ring(r,
                        {"ring $SELF = " + cat.rings[base_idx].dsl_name + "[" + var + "]/(" +
                         poly.str() + ");"},
                        {base_idx}, true);
    }

    std::size_t add_product(std::size_t li, std::size_t ri) {
        return add_ring(make_product(cat.rings[li].ring, cat.rings[ri].ring),
                        {"ring $SELF = " + cat.rings[li].dsl_name + " * " +
                         cat.rings[ri].dsl_name + ";"},
                        {li, ri}, true);
    }

    std::size_t add_quotient(std::size_t base_idx, const std::vector<code_t>& gens,
                             const std::string& ideal_name) {
        RingPtr base = cat.rings[base_idx].ring;
        Ideal I = ideal_span(base, gens);
        RingPtr r = make_quotient(base, I.elems.to_codes());
        return add_ring(r,
                        {"ideal " + ideal_name + " = span(" + cat.rings[base_idx].dsl_name +
                             "," + int_list(gens) + ");",
                         "ring $SELF = " + cat.rings[base_idx].dsl_name + " / " + ideal_name +
                             ";"},
                        {base_idx}, true);
    }

    std::size_t add_hom(std::size_t dom, std::size_t cod, RingHom h, bool listed) {
        // reuse an identical entry when present
        for (std::size_t i = 0; i < cat.homs.size(); ++i) {
            const CatalogHom& ex = cat.homs[i];
            if (ex.dom_index == dom && ex.cod_index == cod && ex.hom.img == h.img) return i;
        }
        std::string spec;
        if (dom == cod) {
            bool ident = true;
            for (code_t x = 0; x < h.dom->order(); ++x)
                if (h.img[x] != x) ident = false;
            if (ident) spec = "id";
        }
        if (spec.empty()) {
            try {
                RingHom can = hom_canonical(h.dom, h.cod);
                if (can.img == h.img) spec = "canonical";
            } catch (const HomError&) {
            }
        }
        if (spec.empty()) spec = "images" + int_list(h.img);
        cat.homs.push_back(CatalogHom{std::move(h), dom, cod, std::move(spec), listed});
        return cat.homs.size() - 1;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

BiAmalg Catalog::build(const InstanceSpec& spec) const {
    const CatalogHom& f = homs[spec.f_index];
    const CatalogHom& g = homs[spec.g_index];
    Ideal b = ideal_span(f.hom.cod, spec.b_gens);
    Ideal c = ideal_span(g.hom.cod, spec.c_gens);
    return biamalg_new(f.hom, g.hom, std::move(b), std::move(c));
}

std::string Catalog::replay_script(const InstanceSpec& spec,
                                   const std::string& check_line) const {
    const CatalogHom& f = homs[spec.f_index];
    const CatalogHom& g = homs[spec.g_index];

    // transitive ring dependencies, emitted in index order
    std::set<std::size_t> needed;
    std::vector<std::size_t> stack{f.dom_index, f.cod_index, g.cod_index};
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        if (!needed.insert(i).second) continue;
        for (std::size_t d : rings[i].deps) stack.push_back(d);
    }

    std::ostringstream os;
    for (std::size_t i : needed)  // std::set iterates ascending
        for (const auto& line : rings[i].decl_lines) os << line << "\n";

    os << "hom f : " << rings[f.dom_index].dsl_name << " -> " << rings[f.cod_index].dsl_name
       << " = " << f.dsl_spec << ";\n";
    os << "hom g : " << rings[g.dom_index].dsl_name << " -> " << rings[g.cod_index].dsl_name
       << " = " << g.dsl_spec << ";\n";
    os << "ideal b = span(" << rings[f.cod_index].dsl_name << "," << int_list(spec.b_gens)
       << ");\n";
    os << "ideal c = span(" << rings[g.cod_index].dsl_name << "," << int_list(spec.c_gens)
       << ");\n";
    os << "biamalg X = (" << rings[f.dom_index].dsl_name << ", f, g, b, c);\n";
    os << check_line << "\n";
    return os.str();
}

Catalog generate_catalog(const CatalogCaps& caps) {
    CatalogBuilder b;
    b.caps = caps;
    b.cat.caps = caps;

    // ring list: Z/n, Galois fields, poly-quot towers, selected products
    for (std::uint64_t n = 2; n <= caps.max_base_order; ++n) b.add_zmod(n);
    for (std::uint64_t q : {4, 8, 9, 16})
        if (q <= caps.max_base_order) {
            std::uint64_t p = (q == 9) ? 3 : 2;
            unsigned k = (q == 4) ? 2 : (q == 8) ? 3 : (q == 9) ? 2 : 4;
            b.add_galois(p, k);
        }

    std::size_t z2 = b.by_name.count("Z/2") ? b.by_name["Z/2"] : b.add_zmod(2);
    std::size_t z3 = b.by_name.count("Z/3") ? b.by_name["Z/3"] : b.add_zmod(3);
    if (4 <= caps.max_tower_order) {
        std::size_t f2x2 = b.add_tower(z2, {0, 0, 1}, "x");
        if (16 <= caps.max_tower_order) {
            std::size_t f2xy = b.add_tower(f2x2, {0, 0, b.cat.rings[f2x2].ring->one()}, "y");
            // kill the cross term: the 8-element plane with xy = 0
            code_t xy = b.cat.rings[f2xy].ring->mul(2, 4);
            b.add_quotient(f2xy, {xy}, "Ixy");
        }
        if (8 <= caps.max_tower_order) b.add_tower(z2, {0, 0, 0, 1}, "x");
        if (16 <= caps.max_tower_order) b.add_tower(z2, {0, 0, 0, 0, 1}, "x");
        if (9 <= caps.max_tower_order) b.add_tower(z3, {0, 0, 1}, "x");
        if (16 <= caps.max_tower_order && b.by_name.count("GF(4)")) {
            std::size_t f4 = b.by_name["GF(4)"];
            b.add_tower(f4, {0, 0, b.cat.rings[f4].ring->one()}, "y");
        }
    }
    // selected products
    {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> prods = {{2, 2}, {2, 4}, {3, 3}};
        for (auto [l, r] : prods)
            if (l * r <= caps.max_base_order)
                b.add_product(b.add_zmod(l), b.add_zmod(r));
        // a two-factor composite product for spectrum checks
        if (caps.max_base_order >= 6) {
            std::size_t z6 = b.add_zmod(6);
            std::size_t z10 = b.by_name.count("Z/10") ? b.by_name["Z/10"] : b.add_zmod(10);
            b.add_product(z6, z10);
        }
    }

    // homs between ring-list members of sweep size
    std::vector<std::size_t> sweep;
    for (std::size_t i = 0; i < b.cat.rings.size(); ++i)
        if (b.cat.rings[i].in_ring_list && b.cat.rings[i].ring->order() <= caps.max_base_order)
            sweep.push_back(i);

    std::mt19937_64 rng(caps.seed);
    for (std::size_t di : sweep) {
        std::size_t listed_from_domain = 0;
        for (std::size_t ci : sweep) {
            if (listed_from_domain >= caps.max_homs_per_domain) break;
            RingPtr dom = b.cat.rings[di].ring;
            RingPtr cod = b.cat.rings[ci].ring;
            std::vector<RingHom> found;
            if (di == ci) found.push_back(hom_identity(dom));
            try {
                found.push_back(hom_canonical(dom, cod));
            } catch (const HomError&) {
            }
            for (RingHom& h : enumerate_homs(dom, cod, caps.max_homs_per_pair))
                found.push_back(std::move(h));
            std::size_t taken = 0;
            for (RingHom& h : found) {
                if (taken >= caps.max_homs_per_pair) break;
                if (listed_from_domain >= caps.max_homs_per_domain) break;
                std::size_t before = b.cat.homs.size();
                b.add_hom(di, ci, std::move(h), true);
                if (b.cat.homs.size() > before) {
                    ++taken;
                    ++listed_from_domain;
                }
            }
        }
    }
    (void)rng;  // reserved for random_hom_trials below

    // optional randomized extension for larger hom spaces
    if (caps.random_hom_trials > 0) {
        for (std::size_t di : sweep) {
            for (std::size_t ci : sweep) {
                RingPtr dom = b.cat.rings[di].ring;
                RingPtr cod = b.cat.rings[ci].ring;
                for (std::size_t t = 0; t < caps.random_hom_trials; ++t) {
                    code_t gen = static_cast<code_t>(rng() % dom->order());
                    code_t img = static_cast<code_t>(rng() % cod->order());
                    try {
                        RingHom h = hom_from_generator_images(dom, cod, {{gen, img}});
                        b.add_hom(di, ci, std::move(h), true);
                    } catch (const HomError&) {
                    }
                }
            }
        }
    }

    // instance sweep: compatible ideal pairs within the size cap
    std::unordered_map<const Ring*, std::vector<Bitset>> ideal_memo;
    auto ideals_of = [&](const RingPtr& R) -> const std::vector<Bitset>& {
        auto it = ideal_memo.find(R.get());
        if (it == ideal_memo.end()) it = ideal_memo.emplace(R.get(), all_ideal_sets(*R)).first;
        return it->second;
    };

    // contraction mask of each ideal of cod along each hom, memoized
    auto contract_mask = [&](const CatalogHom& h, const Bitset& ideal) {
        Bitset m(h.hom.dom->order());
        for (code_t x = 0; x < h.hom.dom->order(); ++x)
            if (ideal.test(h.hom.img[x])) m.set(x);
        return m;
    };

    for (std::size_t fi = 0; fi < b.cat.homs.size(); ++fi) {
        const CatalogHom& f = b.cat.homs[fi];
        if (!f.in_hom_list) continue;
        for (std::size_t gi = 0; gi < b.cat.homs.size(); ++gi) {
            const CatalogHom& g = b.cat.homs[gi];
            if (!g.in_hom_list || g.dom_index != f.dom_index) continue;
            const auto& bideals = ideals_of(f.hom.cod);
            const auto& cideals = ideals_of(g.hom.cod);
            for (std::size_t bi = 0; bi < bideals.size(); ++bi) {
                Bitset i0 = contract_mask(f, bideals[bi]);
                std::size_t a0 = f.hom.dom->order() / i0.count();
                for (std::size_t ci = 0; ci < cideals.size(); ++ci) {
                    std::size_t r_order = a0 * bideals[bi].count() * cideals[ci].count();
                    if (r_order > caps.max_instance_order) continue;
                    if (contract_mask(g, cideals[ci]) != i0) continue;

                    InstanceSpec spec;
                    spec.f_index = fi;
                    spec.g_index = gi;
                    spec.b_gens = minimal_generators(*f.hom.cod, bideals[bi]);
                    spec.c_gens = minimal_generators(*g.hom.cod, cideals[ci]);
                    spec.r_order = r_order;
                    spec.label = b.cat.rings[f.dom_index].ring->name() + " via (" +
                                 b.cat.rings[f.cod_index].ring->name() + "," +
                                 b.cat.rings[g.cod_index].ring->name() + ") #" +
                                 std::to_string(b.cat.instances.size());
                    b.cat.instances.push_back(std::move(spec));
                }
            }
        }
    }

    // mandatory named instances
    auto add_mandatory = [&](std::size_t fdom, std::size_t fcod, std::size_t gcod,
                             const std::vector<code_t>& bg, const std::vector<code_t>& cg,
                             const std::string& label) {
        RingPtr A = b.cat.rings[fdom].ring;
        RingHom f = fdom == fcod ? hom_identity(A) : hom_canonical(A, b.cat.rings[fcod].ring);
        RingHom g = fdom == gcod ? hom_identity(A) : hom_canonical(A, b.cat.rings[gcod].ring);
        std::size_t fi = b.add_hom(fdom, fcod, std::move(f), false);
        std::size_t gi = b.add_hom(fdom, gcod, std::move(g), false);
        InstanceSpec spec;
        spec.f_index = fi;
        spec.g_index = gi;
        spec.b_gens = bg;
        spec.c_gens = cg;
        Ideal bb = ideal_span(b.cat.homs[fi].hom.cod, bg);
        Ideal cc = ideal_span(b.cat.homs[gi].hom.cod, cg);
        Ideal i0 = ideal_contract(b.cat.homs[fi].hom, bb);
        spec.r_order = (A->order() / i0.size()) * bb.size() * cc.size();
        spec.label = label;
        spec.mandatory = true;
        if (spec.r_order > caps.max_instance_order)
            throw RingError("instance cap too small for the mandatory instance " + label);
        b.cat.instances.push_back(std::move(spec));
    };

    {
        std::size_t z8 = b.add_zmod(8);
        std::size_t z4 = b.add_zmod(4);
        add_mandatory(z8, z4, z4, {2}, {2}, "chain-Z8-Z4");

        std::size_t z27 = b.add_ring(make_zmod(27), {"ring $SELF = Z/27;"}, {}, false);
        std::size_t z9 = b.add_zmod(9);
        add_mandatory(z27, z9, z9, {3}, {3}, "chain-Z27-Z9");

        std::size_t z16 = b.add_zmod(16);
        add_mandatory(z16, z16, z16, {4}, {4}, "dup-Z16-4");

        std::size_t z32 = b.add_ring(make_zmod(32), {"ring $SELF = Z/32;"}, {}, false);
        // the amalgamation convention: g = identity, c = the common contraction
        add_mandatory(z32, z16, z32, {4}, {4}, "amalg-Z32-Z16-4");

        std::size_t z12 = b.add_zmod(12);
        std::size_t z3b = b.add_zmod(3);
        add_mandatory(z12, z3b, z3b, {}, {}, "projection-Z12-Z3");
    }

    return b.cat;
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

std::size_t SuiteReport::total_failures() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.failures.size();
    return n;
}

std::string SuiteReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["meta"]["caps"] = {{"max_base_order", caps.max_base_order},
                         {"max_tower_order", caps.max_tower_order},
                         {"max_instance_order", caps.max_instance_order},
                         {"max_homs_per_pair", caps.max_homs_per_pair},
                         {"max_homs_per_domain", caps.max_homs_per_domain}};
    j["meta"]["seed"] = caps.seed;
    j["meta"]["version"] = version;
    if (include_timing) j["meta"]["total_seconds"] = total_seconds;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["theorem"] = r.theorem;
        e["instances"] = r.instances;
        e["applicable"] = r.applicable;
        e["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : r.failures)
            e["failures"].push_back({{"replay", f.replay}, {"witness", f.witness}});
        e["degeneracy_notes"] = r.degeneracy_notes;
        if (include_timing) e["seconds"] = r.seconds;
        j["results"].push_back(std::move(e));
    }
    return j.dump(2);
}

namespace {

struct InstanceOutcomes {
    std::vector<TheoremOutcome> outcomes;  // one per selected instance theorem
};

}  // namespace

SuiteReport run_suite(const Catalog& cat, const std::vector<std::string>& selection,
                      const std::map<std::string, std::set<std::string>>& ablations,
                      unsigned jobs) {
    auto t0 = Clock::now();

    std::vector<const TheoremInfo*> instance_thms, ring_thms;
    for (const auto& info : theorem_registry()) {
        if (!selection.empty() &&
            std::find(selection.begin(), selection.end(), info.id) == selection.end())
            continue;
        (info.instance_scope ? instance_thms : ring_thms).push_back(&info);
    }

    auto ablation_for = [&](const std::string& id) {
        auto it = ablations.find(id);
        return it == ablations.end() ? std::set<std::string>{} : it->second;
    };

    if (jobs == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : std::min(hw, 8u);
    }

    // instance phase: parallel map, deterministic merge by index
    std::vector<InstanceOutcomes> per_instance(cat.instances.size());
    std::vector<std::atomic<std::int64_t>> thm_micros(instance_thms.size());
    for (auto& a : thm_micros) a.store(0);
    {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cat.instances.size()) break;
                BiAmalg inst = cat.build(cat.instances[i]);
                InstanceEvaluator ev(inst);
                InstanceOutcomes& out = per_instance[i];
                out.outcomes.reserve(instance_thms.size());
                for (std::size_t t = 0; t < instance_thms.size(); ++t) {
                    auto e0 = Clock::now();
                    out.outcomes.push_back(
                        ev.evaluate(instance_thms[t]->id, ablation_for(instance_thms[t]->id)));
                    thm_micros[t].fetch_add(
                        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - e0)
                            .count());
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }

    SuiteReport rep;
    rep.caps = cat.caps;
    rep.version = kVersion;

    for (std::size_t ti = 0; ti < instance_thms.size(); ++ti) {
        TheoremSuiteResult res;
        res.theorem = instance_thms[ti]->id;
        std::map<std::string, std::size_t> notes;
        for (std::size_t i = 0; i < cat.instances.size(); ++i) {
            const TheoremOutcome& out = per_instance[i].outcomes[ti];
            ++res.instances;
            if (out.applicable) ++res.applicable;
            for (const auto& n : out.degeneracy_notes)
                if (!n.empty()) ++notes[n];
            if (out.violated) {
                res.failures.push_back(FailureRecord{
                    cat.replay_script(cat.instances[i],
                                      "check X thm(" + out.theorem + ");"),
                    cat.instances[i].label + ": " + out.witness});
            }
        }
        for (const auto& [note, count] : notes)
            res.degeneracy_notes.push_back(note + " (x" + std::to_string(count) + ")");
        res.seconds = static_cast<double>(thm_micros[ti].load()) / 1e6;
        rep.results.push_back(std::move(res));
    }

    for (const TheoremInfo* info : ring_thms) {
        auto tstart = Clock::now();
        TheoremSuiteResult res;
        res.theorem = info->id;
        std::map<std::string, std::size_t> notes;
        for (std::size_t i = 0; i < cat.rings.size(); ++i) {
            if (!cat.rings[i].in_ring_list) continue;
            TheoremOutcome out =
                evaluate_ring_theorem(info->id, cat.rings[i].ring, ablation_for(info->id));
            ++res.instances;
            if (out.applicable) ++res.applicable;
            for (const auto& n : out.degeneracy_notes)
                if (!n.empty()) ++notes[n];
            if (out.violated) {
                std::string replay;
                for (const auto& line : cat.rings[i].decl_lines) replay += line + "\n";
                replay += "check " + cat.rings[i].dsl_name + " thm(" + info->id + ");\n";
                res.failures.push_back(
                    FailureRecord{replay, cat.rings[i].ring->name() + ": " + out.witness});
            }
        }
        for (const auto& [note, count] : notes)
            res.degeneracy_notes.push_back(note + " (x" + std::to_string(count) + ")");
        res.seconds = secs_since(tstart);
        rep.results.push_back(std::move(res));
    }

    rep.total_seconds = secs_since(t0);
    return rep;
}

SearchResult counterexample_search(const Catalog& cat, const std::string& theorem,
                                   const std::set<std::string>& ablated) {
    const TheoremInfo* info = find_theorem(theorem);
    if (!info) throw RingError("unknown theorem id: " + theorem);

    SearchResult res;
    res.theorem = theorem;
    res.ablated = ablated;

    if (info->instance_scope) {
        std::vector<std::size_t> order(cat.instances.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cat.instances[a].r_order < cat.instances[b].r_order;
        });
        for (std::size_t idx : order) {
            BiAmalg inst = cat.build(cat.instances[idx]);
            InstanceEvaluator ev(inst);
            TheoremOutcome out = ev.evaluate(theorem, ablated);
            ++res.searched;
            if (out.violated) {
                res.found = true;
                res.r_order = cat.instances[idx].r_order;
                res.replay = cat.replay_script(cat.instances[idx],
                                               "check X thm(" + theorem + ");");
                res.witness = cat.instances[idx].label + ": " + out.witness;
                return res;
            }
        }
    } else {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < cat.rings.size(); ++i)
            if (cat.rings[i].in_ring_list) order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cat.rings[a].ring->order() < cat.rings[b].ring->order();
        });
        for (std::size_t idx : order) {
            TheoremOutcome out = evaluate_ring_theorem(theorem, cat.rings[idx].ring, ablated);
            ++res.searched;
            if (out.violated) {
                res.found = true;
                res.r_order = cat.rings[idx].ring->order();
                std::string replay;
                for (const auto& line : cat.rings[idx].decl_lines) replay += line + "\n";
                replay += "check " + cat.rings[idx].dsl_name + " thm(" + theorem + ");\n";
                res.replay = replay;
                res.witness = cat.rings[idx].ring->name() + ": " + out.witness;
                return res;
            }
        }
    }
    return res;  // exhaustion
}

}  // namespace biamalg
