#include "biamalg/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "biamalg/classify.hpp"
#include "biamalg/spectra.hpp"
#include "biamalg/theorems.hpp"

namespace biamalg::dsl {

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    Ident, Int, String,
    Semi, Eq, Colon, Arrow, LParen, RParen, LBracket, RBracket, Comma,
    Star, Slash, Plus, Caret, Minus,
    End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::uint64_t value = 0;
    SourcePos pos;
};

struct Lexer {
    const std::string& src;
    std::size_t i = 0;
    SourcePos pos;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg, SourcePos at) const {
        throw ParseError(msg, at);
    }

    char peek() const { return i < src.size() ? src[i] : '\0'; }

    char advance() {
        char c = src[i++];
        if (c == '\n') {
            ++pos.line;
            pos.col = 1;
        } else {
            ++pos.col;
        }
        return c;
    }

    void skip_ws() {
        for (;;) {
            while (i < src.size() && (src[i] == ' ' || src[i] == '\t' || src[i] == '\r' ||
                                      src[i] == '\n'))
                advance();
            if (i + 1 < src.size() && src[i] == '/' && src[i + 1] == '/') {
                while (i < src.size() && src[i] != '\n') advance();
                continue;
            }
            break;
        }
    }

    Token next() {
        skip_ws();
        Token t;
        t.pos = pos;
        if (i >= src.size()) return t;
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                id += advance();
            t.kind = Tok::Ident;
            t.text = std::move(id);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                char d = advance();
                if (v > (UINT64_MAX - 9) / 10) fail("integer literal too large", t.pos);
                v = v * 10 + static_cast<std::uint64_t>(d - '0');
            }
            t.kind = Tok::Int;
            t.value = v;
            return t;
        }
        if (c == '"') {
            advance();
            std::string s;
            while (i < src.size() && peek() != '"') {
                if (peek() == '\n') fail("unterminated string literal", t.pos);
                s += advance();
            }
            if (i >= src.size()) fail("unterminated string literal", t.pos);
            advance();
            t.kind = Tok::String;
            t.text = std::move(s);
            return t;
        }
        advance();
        switch (c) {
            case ';': t.kind = Tok::Semi; return t;
            case '=': t.kind = Tok::Eq; return t;
            case ':': t.kind = Tok::Colon; return t;
            case '(': t.kind = Tok::LParen; return t;
            case ')': t.kind = Tok::RParen; return t;
            case '[': t.kind = Tok::LBracket; return t;
            case ']': t.kind = Tok::RBracket; return t;
            case ',': t.kind = Tok::Comma; return t;
            case '*': t.kind = Tok::Star; return t;
            case '/': t.kind = Tok::Slash; return t;
            case '+': t.kind = Tok::Plus; return t;
            case '^': t.kind = Tok::Caret; return t;
            case '-':
                if (peek() == '>') {
                    advance();
                    t.kind = Tok::Arrow;
                    return t;
                }
                t.kind = Tok::Minus;
                return t;
            default:
                fail(std::string("unexpected character '") + c + "'", t.pos);
        }
        return t;  // unreachable
    }
};

// ---------------------------------------------------------------------------
// parser with name resolution
// ---------------------------------------------------------------------------

enum class NameKind { Ring, Hom, Ideal, Bia };

const char* name_kind_str(NameKind k) {
    switch (k) {
        case NameKind::Ring: return "ring";
        case NameKind::Hom: return "hom";
        case NameKind::Ideal: return "ideal";
        case NameKind::Bia: return "biamalg";
    }
    return "?";
}

struct Parser {
    Lexer lex;
    Token cur;
    std::map<std::string, NameKind> symbols;

    explicit Parser(const std::string& src) : lex(src) { cur = lex.next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur.pos); }

    Token eat(Tok kind, const std::string& what) {
        if (cur.kind != kind) fail("expected " + what);
        Token t = cur;
        cur = lex.next();
        return t;
    }

    bool at_ident(const char* kw) const { return cur.kind == Tok::Ident && cur.text == kw; }

    Token eat_ident(const char* kw) {
        if (!at_ident(kw)) fail(std::string("expected '") + kw + "'");
        return eat(Tok::Ident, kw);
    }

    std::string declare(const std::string& name, NameKind kind, SourcePos at) {
        if (name == "Z" || name == "GF") throw ParseError("'" + name + "' is reserved", at);
        if (symbols.count(name)) throw ParseError("name '" + name + "' already declared", at);
        symbols.emplace(name, kind);
        return name;
    }

    std::string use(const std::string& name, NameKind kind, SourcePos at) {
        auto it = symbols.find(name);
        if (it == symbols.end()) throw ParseError("name '" + name + "' is not declared", at);
        if (it->second != kind)
            throw ParseError("'" + name + "' is a " + name_kind_str(it->second) +
                                 ", expected a " + std::string(name_kind_str(kind)),
                             at);
        return name;
    }

    NameKind kind_of(const std::string& name, SourcePos at) const {
        auto it = symbols.find(name);
        if (it == symbols.end()) throw ParseError("name '" + name + "' is not declared", at);
        return it->second;
    }

    std::vector<code_t> int_list_body() {
        std::vector<code_t> out;
        eat(Tok::LBracket, "'['");
        if (cur.kind != Tok::RBracket) {
            for (;;) {
                Token v = eat(Tok::Int, "integer");
                out.push_back(static_cast<code_t>(v.value));
                if (cur.kind == Tok::Comma) {
                    eat(Tok::Comma, "','");
                    continue;
                }
                break;
            }
        }
        eat(Tok::RBracket, "']'");
        return out;
    }

    PolyLit parse_poly(const std::string& var) {
        PolyLit p;
        p.var = var;
        auto put = [&](std::size_t deg, code_t coef) {
            if (deg > 64) throw ParseError("polynomial degree too large", cur.pos);
            if (p.coeffs.size() <= deg) p.coeffs.resize(deg + 1, 0);
            p.coeffs[deg] = p.coeffs[deg] + coef;  // duplicate terms add as literals
        };
        for (;;) {
            SourcePos at = cur.pos;
            if (cur.kind == Tok::Int) {
                code_t coef = static_cast<code_t>(eat(Tok::Int, "integer").value);
                if (cur.kind == Tok::Star) {
                    eat(Tok::Star, "'*'");
                    Token v = eat(Tok::Ident, "variable");
                    if (v.text != var)
                        throw ParseError("unknown variable '" + v.text + "' (expected '" +
                                             var + "')",
                                         v.pos);
                    std::size_t deg = 1;
                    if (cur.kind == Tok::Caret) {
                        eat(Tok::Caret, "'^'");
                        deg = eat(Tok::Int, "exponent").value;
                    }
                    put(deg, coef);
                } else {
                    put(0, coef);
                }
            } else if (cur.kind == Tok::Ident) {
                Token v = eat(Tok::Ident, "variable");
                if (v.text != var)
                    throw ParseError(
                        "unknown variable '" + v.text + "' (expected '" + var + "')", v.pos);
                std::size_t deg = 1;
                if (cur.kind == Tok::Caret) {
                    eat(Tok::Caret, "'^'");
                    deg = eat(Tok::Int, "exponent").value;
                }
                put(deg, 1);
            } else {
                throw ParseError("expected a polynomial term", at);
            }
            if (cur.kind == Tok::Plus) {
                eat(Tok::Plus, "'+'");
                continue;
            }
            break;
        }
        return p;
    }

    std::unique_ptr<RingExpr> parse_atom() {
        auto node = std::make_unique<RingExpr>();
        node->pos = cur.pos;
        if (at_ident("Z")) {
            eat_ident("Z");
            eat(Tok::Slash, "'/'");
            node->kind = RingExpr::Kind::Zmod;
            node->n = eat(Tok::Int, "modulus").value;
        } else if (at_ident("GF")) {
            eat_ident("GF");
            eat(Tok::LParen, "'('");
            node->kind = RingExpr::Kind::Galois;
            node->n = eat(Tok::Int, "prime power").value;
            eat(Tok::RParen, "')'");
        } else if (cur.kind == Tok::Ident) {
            Token name = eat(Tok::Ident, "ring name");
            node->kind = RingExpr::Kind::Ref;
            node->name = use(name.text, NameKind::Ring, name.pos);
        } else {
            fail("expected a ring expression");
        }
        // postfix polynomial quotients: base[x]/(poly)
        while (cur.kind == Tok::LBracket) {
            eat(Tok::LBracket, "'['");
            Token var = eat(Tok::Ident, "variable");
            eat(Tok::RBracket, "']'");
            eat(Tok::Slash, "'/'");
            eat(Tok::LParen, "'('");
            PolyLit poly = parse_poly(var.text);
            eat(Tok::RParen, "')'");
            auto quot = std::make_unique<RingExpr>();
            quot->kind = RingExpr::Kind::PolyQuot;
            quot->pos = node->pos;
            quot->base = std::move(node);
            quot->poly = std::move(poly);
            node = std::move(quot);
        }
        return node;
    }

    // product binds tighter than ideal quotient: A * B / I = (A * B) / I
    std::unique_ptr<RingExpr> parse_rexpr() {
        auto node = parse_atom();
        while (cur.kind == Tok::Star) {
            eat(Tok::Star, "'*'");
            auto rhs = parse_atom();
            auto prod = std::make_unique<RingExpr>();
            prod->kind = RingExpr::Kind::Product;
            prod->pos = node->pos;
            prod->left = std::move(node);
            prod->right = std::move(rhs);
            node = std::move(prod);
        }
        if (cur.kind == Tok::Slash) {
            eat(Tok::Slash, "'/'");
            Token ideal = eat(Tok::Ident, "ideal name");
            auto quot = std::make_unique<RingExpr>();
            quot->kind = RingExpr::Kind::Quotient;
            quot->pos = node->pos;
            quot->base = std::move(node);
            quot->ideal_name = use(ideal.text, NameKind::Ideal, ideal.pos);
            node = std::move(quot);
        }
        return node;
    }

    std::string parse_theorem_id() {
        std::string id = eat(Tok::Ident, "theorem id").text;
        while (cur.kind == Tok::Minus) {
            eat(Tok::Minus, "'-'");
            id += "-" + eat(Tok::Ident, "theorem id part").text;
        }
        return id;
    }

    Stmt parse_stmt() {
        Stmt s;
        s.pos = cur.pos;
        if (at_ident("ring")) {
            eat_ident("ring");
            s.kind = Stmt::Kind::Ring;
            Token name = eat(Tok::Ident, "name");
            eat(Tok::Eq, "'='");
            s.rexpr = parse_rexpr();
            eat(Tok::Semi, "';'");
            s.name = declare(name.text, NameKind::Ring, name.pos);
        } else if (at_ident("hom")) {
            eat_ident("hom");
            s.kind = Stmt::Kind::Hom;
            Token name = eat(Tok::Ident, "name");
            eat(Tok::Colon, "':'");
            Token dom = eat(Tok::Ident, "domain ring");
            s.dom = use(dom.text, NameKind::Ring, dom.pos);
            eat(Tok::Arrow, "'->'");
            Token cod = eat(Tok::Ident, "codomain ring");
            s.cod = use(cod.text, NameKind::Ring, cod.pos);
            eat(Tok::Eq, "'='");
            if (at_ident("canonical")) {
                eat_ident("canonical");
                s.homspec = Stmt::HomSpec::Canonical;
            } else if (at_ident("id")) {
                eat_ident("id");
                s.homspec = Stmt::HomSpec::Id;
            } else if (at_ident("images")) {
                eat_ident("images");
                s.homspec = Stmt::HomSpec::Images;
                s.images = int_list_body();
            } else {
                fail("expected 'canonical', 'id' or 'images[...]'");
            }
            eat(Tok::Semi, "';'");
            s.name = declare(name.text, NameKind::Hom, name.pos);
        } else if (at_ident("ideal")) {
            eat_ident("ideal");
            s.kind = Stmt::Kind::Ideal;
            Token name = eat(Tok::Ident, "name");
            eat(Tok::Eq, "'='");
            eat_ident("span");
            eat(Tok::LParen, "'('");
            Token ring = eat(Tok::Ident, "ring name");
            s.ring_name = use(ring.text, NameKind::Ring, ring.pos);
            eat(Tok::Comma, "','");
            s.elems = int_list_body();
            eat(Tok::RParen, "')'");
            eat(Tok::Semi, "';'");
            s.name = declare(name.text, NameKind::Ideal, name.pos);
        } else if (at_ident("biamalg")) {
            eat_ident("biamalg");
            s.kind = Stmt::Kind::Bia;
            Token name = eat(Tok::Ident, "name");
            eat(Tok::Eq, "'='");
            eat(Tok::LParen, "'('");
            Token a = eat(Tok::Ident, "ring A");
            s.a = use(a.text, NameKind::Ring, a.pos);
            eat(Tok::Comma, "','");
            Token f = eat(Tok::Ident, "hom f");
            s.f = use(f.text, NameKind::Hom, f.pos);
            eat(Tok::Comma, "','");
            Token g = eat(Tok::Ident, "hom g");
            s.g = use(g.text, NameKind::Hom, g.pos);
            eat(Tok::Comma, "','");
            Token b = eat(Tok::Ident, "ideal b");
            s.b = use(b.text, NameKind::Ideal, b.pos);
            eat(Tok::Comma, "','");
            Token c = eat(Tok::Ident, "ideal c");
            s.c = use(c.text, NameKind::Ideal, c.pos);
            eat(Tok::RParen, "')'");
            eat(Tok::Semi, "';'");
            s.name = declare(name.text, NameKind::Bia, name.pos);
        } else if (at_ident("check")) {
            eat_ident("check");
            s.kind = Stmt::Kind::Check;
            Token name = eat(Tok::Ident, "name");
            NameKind k = kind_of(name.text, name.pos);
            if (k != NameKind::Ring && k != NameKind::Bia)
                throw ParseError("check target must be a ring or a biamalg", name.pos);
            s.name = name.text;
            Token prop = eat(Tok::Ident, "property");
            static const std::vector<std::string> plain = {
                "gaussian", "prufer", "local", "spec", "fiber", "star", "doublestar",
                "blackstar"};
            if (std::find(plain.begin(), plain.end(), prop.text) != plain.end()) {
                s.prop = prop.text;
            } else if (prop.text == "localize") {
                s.prop = "localize";
                eat(Tok::LParen, "'('");
                Token arg = eat(Tok::Ident, "ideal name");
                s.prop_arg = use(arg.text, NameKind::Ideal, arg.pos);
                eat(Tok::RParen, "')'");
            } else if (prop.text == "thm") {
                s.prop = "thm";
                eat(Tok::LParen, "'('");
                s.prop_arg = parse_theorem_id();
                eat(Tok::RParen, "')'");
                if (!find_theorem(s.prop_arg))
                    throw ParseError("unknown theorem id '" + s.prop_arg + "'", prop.pos);
            } else {
                throw ParseError("unknown property '" + prop.text + "'", prop.pos);
            }
            bool instance_only = s.prop == "fiber" || s.prop == "star" ||
                                 s.prop == "doublestar" || s.prop == "blackstar" ||
                                 s.prop == "localize";
            if (s.prop == "thm") {
                const TheoremInfo* info = find_theorem(s.prop_arg);
                instance_only = info && info->instance_scope;
            }
            if (instance_only && k != NameKind::Bia)
                throw ParseError("property '" + s.prop + "' needs a biamalg target", name.pos);
            eat(Tok::Semi, "';'");
        } else if (at_ident("export")) {
            eat_ident("export");
            s.kind = Stmt::Kind::Export;
            eat_ident("spec");
            Token name = eat(Tok::Ident, "name");
            NameKind k = kind_of(name.text, name.pos);
            if (k != NameKind::Ring && k != NameKind::Bia)
                throw ParseError("export target must be a ring or a biamalg", name.pos);
            s.name = name.text;
            eat_ident("dot");
            s.path = eat(Tok::String, "path string").text;
            eat(Tok::Semi, "';'");
        } else {
            fail("expected a statement (ring / hom / ideal / biamalg / check / export)");
        }
        return s;
    }

    Script parse_script() {
        Script sc;
        while (cur.kind != Tok::End) sc.stmts.push_back(parse_stmt());
        return sc;
    }
};

}  // namespace

Script parse_dsl(const std::string& source) {
    Parser p(source);
    return p.parse_script();
}

// ---------------------------------------------------------------------------
// pretty printer
// ---------------------------------------------------------------------------

namespace {

void print_rexpr(std::ostream& os, const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::Zmod:
            os << "Z/" << e.n;
            break;
        case RingExpr::Kind::Galois:
            os << "GF(" << e.n << ")";
            break;
        case RingExpr::Kind::Product:
            print_rexpr(os, *e.left);
            os << " * ";
            print_rexpr(os, *e.right);
            break;
        case RingExpr::Kind::PolyQuot: {
            print_rexpr(os, *e.base);
            os << "[" << e.poly.var << "]/(";
            bool first = true;
            for (std::size_t i = e.poly.coeffs.size(); i-- > 0;) {
                if (e.poly.coeffs[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0) {
                    os << e.poly.coeffs[i];
                } else {
                    if (e.poly.coeffs[i] != 1) os << e.poly.coeffs[i] << "*";
                    os << e.poly.var;
                    if (i > 1) os << "^" << i;
                }
            }
            if (first) os << "0";
            os << ")";
            break;
        }
        case RingExpr::Kind::Quotient:
            print_rexpr(os, *e.base);
            os << " / " << e.ideal_name;
            break;
        case RingExpr::Kind::Ref:
            os << e.name;
            break;
    }
}

std::string int_list(const std::vector<code_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

std::string pretty_print(const Script& script) {
    std::ostringstream os;
    for (const Stmt& s : script.stmts) {
        switch (s.kind) {
            case Stmt::Kind::Ring:
                os << "ring " << s.name << " = ";
                print_rexpr(os, *s.rexpr);
                os << ";\n";
                break;
            case Stmt::Kind::Hom:
                os << "hom " << s.name << " : " << s.dom << " -> " << s.cod << " = ";
                if (s.homspec == Stmt::HomSpec::Canonical) os << "canonical";
                else if (s.homspec == Stmt::HomSpec::Id) os << "id";
                else os << "images" << int_list(s.images);
                os << ";\n";
                break;
            case Stmt::Kind::Ideal:
                os << "ideal " << s.name << " = span(" << s.ring_name << ","
                   << int_list(s.elems) << ");\n";
                break;
            case Stmt::Kind::Bia:
                os << "biamalg " << s.name << " = (" << s.a << ", " << s.f << ", " << s.g
                   << ", " << s.b << ", " << s.c << ");\n";
                break;
            case Stmt::Kind::Check:
                os << "check " << s.name << " " << s.prop;
                if (!s.prop_arg.empty()) os << "(" << s.prop_arg << ")";
                os << ";\n";
                break;
            case Stmt::Kind::Export:
                os << "export spec " << s.name << " dot \"" << s.path << "\";\n";
                break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// execution
// ---------------------------------------------------------------------------

namespace {

struct Env {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, RingHom> homs;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, std::shared_ptr<BiAmalg>> bias;
};

RingPtr eval_rexpr(const RingExpr& e, Env& env) {
    switch (e.kind) {
        case RingExpr::Kind::Zmod:
            return make_zmod(e.n);
        case RingExpr::Kind::Galois: {
            std::uint64_t n = e.n;
            if (n < 2) throw ParseError("GF order must be a prime power >= 2", e.pos);
            std::uint64_t p = 2;
            while (p * p <= n && n % p != 0) ++p;
            if (p * p > n) p = n;  // n itself is prime
            unsigned k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            if (n != 1) throw ParseError("GF order is not a prime power", e.pos);
            return make_galois(p, k);
        }
        case RingExpr::Kind::Product:
            return make_product(eval_rexpr(*e.left, env), eval_rexpr(*e.right, env));
        case RingExpr::Kind::PolyQuot: {
            RingPtr base = eval_rexpr(*e.base, env);
            for (code_t c : e.poly.coeffs)
                if (c >= base->order())
                    throw ParseError("polynomial coefficient code out of range", e.pos);
            return make_poly_quot(base, e.poly.coeffs, e.poly.var);
        }
        case RingExpr::Kind::Quotient: {
            RingPtr base = eval_rexpr(*e.base, env);
            const Ideal& I = env.ideals.at(e.ideal_name);
            if (I.ring != base)
                throw ParseError("ideal '" + e.ideal_name + "' does not live in this ring",
                                 e.pos);
            return make_quotient(base, I.elems.to_codes());
        }
        case RingExpr::Kind::Ref:
            return env.rings.at(e.name);
    }
    throw ParseError("unreachable", e.pos);
}

std::string verdict_line(const std::string& prop, bool value) {
    return prop + ": " + (value ? "true" : "false");
}

}  // namespace

ExecutionReport execute_script(const Script& script, const ExecOptions&) {
    ExecutionReport rep;
    Env env;

    for (const Stmt& s : script.stmts) {
        try {
            switch (s.kind) {
                case Stmt::Kind::Ring:
                    env.rings.emplace(s.name, eval_rexpr(*s.rexpr, env));
                    break;
                case Stmt::Kind::Hom: {
                    RingPtr dom = env.rings.at(s.dom);
                    RingPtr cod = env.rings.at(s.cod);
                    RingHom h = [&] {
                        switch (s.homspec) {
                            case Stmt::HomSpec::Canonical:
                                return hom_canonical(dom, cod);
                            case Stmt::HomSpec::Id:
                                if (dom != cod)
                                    throw ParseError("id needs equal domain and codomain",
                                                     s.pos);
                                return hom_identity(dom);
                            case Stmt::HomSpec::Images:
                                return hom_from_table(dom, cod, s.images);
                        }
                        throw ParseError("unreachable", s.pos);
                    }();
                    env.homs.emplace(s.name, std::move(h));
                    break;
                }
                case Stmt::Kind::Ideal: {
                    RingPtr R = env.rings.at(s.ring_name);
                    for (code_t x : s.elems)
                        if (x >= R->order())
                            throw ParseError("element code out of range for " + s.ring_name,
                                             s.pos);
                    env.ideals.emplace(s.name, ideal_span(R, s.elems));
                    break;
                }
                case Stmt::Kind::Bia: {
                    RingPtr A = env.rings.at(s.a);
                    const RingHom& f = env.homs.at(s.f);
                    const RingHom& g = env.homs.at(s.g);
                    if (f.dom != A || g.dom != A)
                        throw ParseError("homs must start at the declared ring A", s.pos);
                    const Ideal& b = env.ideals.at(s.b);
                    const Ideal& c = env.ideals.at(s.c);
                    env.bias.emplace(s.name,
                                     std::make_shared<BiAmalg>(biamalg_new(f, g, b, c)));
                    break;
                }
                case Stmt::Kind::Check: {
                    CheckResult res;
                    res.pos = s.pos;
                    res.target = s.name;
                    res.property = s.prop + (s.prop_arg.empty() ? "" : "(" + s.prop_arg + ")");

                    auto bia_it = env.bias.find(s.name);
                    std::shared_ptr<BiAmalg> bia =
                        bia_it == env.bias.end() ? nullptr : bia_it->second;
                    RingPtr ring = bia ? bia->R : env.rings.at(s.name);

                    if (s.prop == "gaussian") {
                        PropertyVerdict v = is_gaussian(*ring);
                        res.pass = v.verdict;
                        res.detail = v.witness;
                        rep.output_lines.push_back(verdict_line("gaussian", v.verdict));
                    } else if (s.prop == "prufer") {
                        PropertyVerdict v = is_prufer(*ring);
                        res.pass = v.verdict;
                        res.detail = v.degeneracy_note;
                        rep.output_lines.push_back(verdict_line("prufer", v.verdict) + "  // " +
                                                   v.degeneracy_note);
                    } else if (s.prop == "local") {
                        bool v = ring_invariants(*ring).is_local;
                        res.pass = v;
                        rep.output_lines.push_back(verdict_line("local", v));
                    } else if (s.prop == "spec") {
                        if (bia) {
                            SpecReport sr = assemble_spec(*bia);
                            res.pass = sr.ok();
                            std::ostringstream os;
                            os << "spec: " << sr.primes.size() << " primes";
                            for (const auto& p : sr.primes)
                                os << " [" << provenance_str(p.provenance) << "]";
                            rep.output_lines.push_back(os.str());
                        } else {
                            SpecResult sr = enumerate_spec(*ring);
                            res.pass = true;
                            std::ostringstream os;
                            os << "spec: " << sr.primes.size() << " primes (all maximal)";
                            rep.output_lines.push_back(os.str());
                        }
                    } else if (s.prop == "fiber") {
                        res.pass = verify_fiber_product(*bia).ok();
                        rep.output_lines.push_back(verdict_line("fiber", res.pass));
                    } else if (s.prop == "star" || s.prop == "doublestar" ||
                               s.prop == "blackstar") {
                        ConditionChecks cc = condition_checks(*bia);
                        const PropertyVerdict& v = s.prop == "star" ? cc.star
                                                   : s.prop == "doublestar" ? cc.doublestar
                                                                            : cc.blackstar;
                        res.pass = v.verdict;
                        res.detail = v.witness;
                        rep.output_lines.push_back(verdict_line(s.prop, v.verdict));
                    } else if (s.prop == "localize") {
                        const Ideal& p = env.ideals.at(s.prop_arg);
                        LocalizationIsoReport lr = verify_localization_iso(*bia, p);
                        res.pass = lr.ok();
                        rep.output_lines.push_back(verdict_line("localize", res.pass));
                    } else if (s.prop == "thm") {
                        const TheoremInfo* info = find_theorem(s.prop_arg);
                        TheoremOutcome out = info->instance_scope
                                                 ? evaluate_theorem(s.prop_arg, *bia)
                                                 : evaluate_ring_theorem(s.prop_arg, ring);
                        res.pass = !out.violated;
                        std::ostringstream os;
                        os << "thm(" << s.prop_arg << "): "
                           << (out.violated           ? "VIOLATED"
                               : out.applicable       ? "holds (hypotheses satisfied)"
                                                      : "not applicable (a hypothesis fails)");
                        rep.output_lines.push_back(os.str());
                        for (const auto& h : out.hypotheses)
                            rep.output_lines.push_back("  hyp " + h.name + ": " +
                                                       (h.holds ? "true" : "false"));
                        for (const auto& c : out.conclusions)
                            rep.output_lines.push_back("  concl " + c.name + ": " +
                                                       (c.holds ? "true" : "false"));
                        res.detail = out.witness;
                    }
                    rep.checks.push_back(std::move(res));
                    break;
                }
                case Stmt::Kind::Export: {
                    auto bia_it = env.bias.find(s.name);
                    std::string dot = bia_it != env.bias.end()
                                          ? spec_dot_instance(*bia_it->second)
                                          : spec_dot_ring(*env.rings.at(s.name));
                    std::ofstream out(s.path);
                    if (!out) throw ParseError("cannot write '" + s.path + "'", s.pos);
                    out << dot;
                    rep.exported_files.push_back(s.path);
                    break;
                }
            }
        } catch (const ParseError& e) {
            rep.exit_code = 2;
            rep.error = "line " + std::to_string(e.position.line) + ":" +
                        std::to_string(e.position.col) + ": " + e.what();
            return rep;
        } catch (const std::exception& e) {
            rep.exit_code = 2;
            rep.error = "line " + std::to_string(s.pos.line) + ":" + std::to_string(s.pos.col) +
                        ": " + e.what();
            return rep;
        }
    }

    for (const auto& c : rep.checks)
        if (!c.pass) rep.exit_code = 1;
    return rep;
}

ExecutionReport run_source(const std::string& source, const ExecOptions& opts) {
    try {
        Script sc = parse_dsl(source);
        return execute_script(sc, opts);
    } catch (const ParseError& e) {
        ExecutionReport rep;
        rep.exit_code = 2;
        rep.error = "line " + std::to_string(e.position.line) + ":" +
                    std::to_string(e.position.col) + ": " + e.what();
        return rep;
    }
}

RingPtr eval_standalone_ring(const RingExpr& e) {
    Env env;
    return eval_rexpr(e, env);
}

std::string ExecutionReport::to_json() const {
    nlohmann::ordered_json j;
    j["meta"]["version"] = "0.1.0";
    j["meta"]["exit_code"] = exit_code;
    if (!error.empty()) j["meta"]["error"] = error;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["theorem"] = c.target + " " + c.property;
        e["instances"] = 1;
        e["failures"] = nlohmann::ordered_json::array();
        if (!c.pass) e["failures"].push_back({{"replay", c.target}, {"witness", c.detail}});
        e["degeneracy_notes"] = nlohmann::ordered_json::array();
        j["results"].push_back(std::move(e));
    }
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

namespace {

std::string gen_label(const Ideal& I) {
    std::vector<code_t> gens = I.gens.empty() ? minimal_generators(*I.ring, I.elems) : I.gens;
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += I.ring->element_str(gens[i]);
    }
    return s + ")";
}

}  // namespace

std::string spec_dot_ring(const Ring& R) {
    SpecResult spec = enumerate_spec(R);
    std::ostringstream os;
    os << "digraph spec {\n";
    os << "  // finite ring: every prime is maximal, the specialization order is discrete\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < spec.primes.size(); ++i)
        os << "  p" << i << " [label=\"" << gen_label(spec.primes[i].ideal) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string spec_dot_instance(const BiAmalg& inst) {
    SpecReport rep = assemble_spec(inst);
    std::ostringstream os;
    os << "digraph spec {\n";
    os << "  // finite ring: every prime is maximal, the specialization order is discrete\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < rep.primes.size(); ++i)
        os << "  p" << i << " [label=\"" << gen_label(rep.primes[i].ideal) << " ["
           << provenance_str(rep.primes[i].provenance) << "]\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace biamalg::dsl
