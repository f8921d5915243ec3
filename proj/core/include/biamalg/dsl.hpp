#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "biamalg/biamalg.hpp"

namespace biamalg::dsl {

struct SourcePos {
    int line = 1;
    int col = 1;
};

class ParseError : public RingError {
public:
    ParseError(std::string msg, SourcePos pos)
        : RingError(std::move(msg)), position(pos) {}
    SourcePos position;
};

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

struct PolyLit {
    std::string var;
    std::vector<code_t> coeffs;  // constant term first, literal codes
};

struct RingExpr {
    enum class Kind { Zmod, Galois, Product, PolyQuot, Quotient, Ref };
    Kind kind = Kind::Zmod;
    std::uint64_t n = 0;                      // Zmod modulus / Galois order
    std::unique_ptr<RingExpr> left, right;    // Product
    std::unique_ptr<RingExpr> base;           // PolyQuot / Quotient
    PolyLit poly;                             // PolyQuot
    std::string name;                         // Ref
    std::string ideal_name;                   // Quotient
    SourcePos pos;
};

struct Stmt {
    enum class Kind { Ring, Hom, Ideal, Bia, Check, Export };
    Kind kind = Kind::Ring;
    SourcePos pos;
    std::string name;  // declared name, or the check/export target

    std::unique_ptr<RingExpr> rexpr;  // Ring

    std::string dom, cod;  // Hom
    enum class HomSpec { Canonical, Id, Images };
    HomSpec homspec = HomSpec::Canonical;
    std::vector<code_t> images;

    std::string ring_name;        // Ideal
    std::vector<code_t> elems;    // Ideal generators

    std::string a, f, g, b, c;  // Bia

    std::string prop;      // Check: gaussian|prufer|local|spec|fiber|star|doublestar|
                           //        blackstar|localize|thm
    std::string prop_arg;  // localize ideal name / thm id

    std::string path;  // Export
};

struct Script {
    std::vector<Stmt> stmts;
};

/// Parse with full name resolution: names must be declared before use and
/// referenced with the right kind (ring / hom / ideal / biamalg). Throws
/// ParseError with a source position on any lexical, syntactic or resolution
/// failure.
Script parse_dsl(const std::string& source);

/// Canonical formatting; parse-then-print is a fixpoint.
std::string pretty_print(const Script& script);

// ---------------------------------------------------------------------------
// execution
// ---------------------------------------------------------------------------

struct CheckResult {
    SourcePos pos;
    std::string target;
    std::string property;  // includes the argument, e.g. "thm(gauss-sufficient)"
    bool pass = false;
    std::string detail;    // clause values / witness / degeneracy notes
};

struct ExecutionReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> output_lines;  // verdict lines, spec listings
    std::vector<std::string> exported_files;
    int exit_code = 0;  // 0 checks pass, 1 check failed, 2 input/validation error
    std::string error;  // set when exit_code = 2

    std::string to_json() const;  // harness report schema
};

struct ExecOptions {
    bool collect_json = false;
};

ExecutionReport execute_script(const Script& script, const ExecOptions& opts = {});

/// Parse + execute, mapping parse errors to exit code 2.
ExecutionReport run_source(const std::string& source, const ExecOptions& opts = {});

/// Evaluate a name-free ring expression (no Ref / ideal-quotient nodes);
/// used by the one-shot CLI commands.
RingPtr eval_standalone_ring(const RingExpr& e);

/// DOT digraph of a spectrum: one node per prime labeled with generators and
/// provenance; finite rings have no specialization edges.
std::string spec_dot_ring(const Ring& R);
std::string spec_dot_instance(const BiAmalg& inst);

}  // namespace biamalg::dsl
