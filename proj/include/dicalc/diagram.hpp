#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dicalc/cyclotomic.hpp"
#include "dicalc/hecke.hpp"

namespace dicalc {

enum class GenKind : unsigned char { Id, EndDot, StartDot, Split, Merge, Vertex2n };

struct DiagramError : std::runtime_error {
    explicit DiagramError(const std::string& what) : std::runtime_error(what) {}
};

/// Two-color Soergel diagram as a composition tree. Vertical composition puts
/// the left operand on top; horizontal composition puts it leftmost.
class Diagram {
  public:
    enum class Tag : unsigned char { Empty, Gen, HComp, VComp };

    using Ptr = std::shared_ptr<const Diagram>;

    static Ptr empty() { return std::make_shared<Diagram>(Tag::Empty); }
    static Ptr gen(GenKind k, Color c) {
        auto d = std::make_shared<Diagram>(Tag::Gen);
        d->kind_ = k;
        d->color_ = c;
        return d;
    }
    static Ptr hcomp(Ptr left, Ptr right) {
        auto d = std::make_shared<Diagram>(Tag::HComp);
        d->a_ = std::move(left);
        d->b_ = std::move(right);
        return d;
    }
    static Ptr vcomp(Ptr top, Ptr bottom) {
        auto d = std::make_shared<Diagram>(Tag::VComp);
        d->a_ = std::move(top);
        d->b_ = std::move(bottom);
        return d;
    }

    explicit Diagram(Tag t) : tag_(t) {}

    Tag tag() const { return tag_; }
    GenKind kind() const { return kind_; }
    Color color() const { return color_; }
    const Ptr& left() const { return a_; }   // or top for VComp
    const Ptr& right() const { return b_; }  // or bottom for VComp

  private:
    Tag tag_;
    GenKind kind_ = GenKind::Id;
    Color color_ = Color::S;
    Ptr a_, b_;
};

using DiagramPtr = Diagram::Ptr;

struct Boundary {
    std::vector<Color> source;  // bottom word
    std::vector<Color> target;  // top word
};

/// Bottom/top words; throws on vertical mismatches. n is needed only when a
/// 2n-vertex occurs (kInfinity rejects it).
inline Boundary boundary(const Diagram& d, int n) {
    switch (d.tag()) {
        case Diagram::Tag::Empty: return {{}, {}};
        case Diagram::Tag::Gen: {
            Color c = d.color();
            switch (d.kind()) {
                case GenKind::Id: return {{c}, {c}};
                case GenKind::EndDot: return {{c}, {}};
                case GenKind::StartDot: return {{}, {c}};
                case GenKind::Split: return {{c}, {c, c}};
                case GenKind::Merge: return {{c, c}, {c}};
                case GenKind::Vertex2n: {
                    if (n == kInfinity) throw DiagramError("2n-vertex needs a finite n");
                    return {DihedralWord{c, n}.letters(), DihedralWord{opposite(c), n}.letters()};
                }
            }
            throw DiagramError("unknown generator");
        }
        case Diagram::Tag::HComp: {
            Boundary l = boundary(*d.left(), n), r = boundary(*d.right(), n);
            l.source.insert(l.source.end(), r.source.begin(), r.source.end());
            l.target.insert(l.target.end(), r.target.begin(), r.target.end());
            return l;
        }
        case Diagram::Tag::VComp: {
            Boundary top = boundary(*d.left(), n), bot = boundary(*d.right(), n);
            if (bot.target != top.source)
                throw DiagramError("vertical composition boundary mismatch: top needs " + word_str(top.source) +
                                   " but bottom provides " + word_str(bot.target));
            return {bot.source, top.target};
        }
    }
    throw DiagramError("unreachable");
}

inline int diagram_degree(const Diagram& d) {
    switch (d.tag()) {
        case Diagram::Tag::Empty: return 0;
        case Diagram::Tag::Gen:
            switch (d.kind()) {
                case GenKind::Id:
                case GenKind::Vertex2n: return 0;
                case GenKind::EndDot:
                case GenKind::StartDot: return 1;
                case GenKind::Split:
                case GenKind::Merge: return -1;
            }
            return 0;
        case Diagram::Tag::HComp:
        case Diagram::Tag::VComp: return diagram_degree(*d.left()) + diagram_degree(*d.right());
    }
    return 0;
}

/// cup: split with a start dot underneath, boundary empty -> cc, degree 0.
inline DiagramPtr cup(Color c) { return Diagram::vcomp(Diagram::gen(GenKind::Split, c), Diagram::gen(GenKind::StartDot, c)); }
/// cap: merge with an end dot on top, boundary cc -> empty, degree 0.
inline DiagramPtr cap(Color c) { return Diagram::vcomp(Diagram::gen(GenKind::EndDot, c), Diagram::gen(GenKind::Merge, c)); }

inline DiagramPtr identity_diagram(const std::vector<Color>& word) {
    if (word.empty()) return Diagram::empty();
    DiagramPtr d = Diagram::gen(GenKind::Id, word.front());
    for (std::size_t i = 1; i < word.size(); ++i) d = Diagram::hcomp(d, Diagram::gen(GenKind::Id, word[i]));
    return d;
}

/// The degree-zero Wenzl gadget on the three leftmost strands of the
/// alternating word of length k: end the second strand with a dot, merge the
/// two outer strands, split again, restart the second strand.
inline DiagramPtr jw_gadget(int k, Color leading) {
    if (k < 3) throw DiagramError("jw_gadget: needs at least three strands");
    std::vector<Color> letters = DihedralWord{leading, k}.letters();
    Color c = letters[0], d = letters[1];
    DiagramPtr rest = identity_diagram(std::vector<Color>(letters.begin() + 3, letters.end()));
    DiagramPtr idc = Diagram::gen(GenKind::Id, c);
    auto with_rest = [&](DiagramPtr x) { return Diagram::hcomp(std::move(x), rest); };
    DiagramPtr kill = with_rest(Diagram::hcomp(idc, Diagram::hcomp(Diagram::gen(GenKind::EndDot, d), idc)));
    DiagramPtr merge = with_rest(Diagram::gen(GenKind::Merge, c));
    DiagramPtr split = with_rest(Diagram::gen(GenKind::Split, c));
    DiagramPtr revive = with_rest(Diagram::hcomp(idc, Diagram::hcomp(Diagram::gen(GenKind::StartDot, d), idc)));
    return Diagram::vcomp(revive, Diagram::vcomp(split, Diagram::vcomp(merge, kill)));
}

/// Formal linear combination of diagrams with one shared boundary.
struct DiagramExpr {
    std::vector<std::pair<Cyc, DiagramPtr>> terms;
    Boundary bdy;
    int degree = 0;
};

inline DiagramExpr expr_from_diagram(DiagramPtr d, const Cyc& coeff, int n) {
    DiagramExpr e;
    e.bdy = boundary(*d, n);
    e.degree = diagram_degree(*d);
    if (!coeff.is_zero()) e.terms.emplace_back(coeff, std::move(d));
    return e;
}

inline DiagramExpr expr_add(DiagramExpr a, const DiagramExpr& b) {
    if (!a.terms.empty() && !b.terms.empty()) {
        if (a.bdy.source != b.bdy.source || a.bdy.target != b.bdy.target)
            throw DiagramError("sum of diagrams with different boundaries: " + word_str(a.bdy.source) + "->" +
                               word_str(a.bdy.target) + " vs " + word_str(b.bdy.source) + "->" + word_str(b.bdy.target));
        if (a.degree != b.degree) throw DiagramError("sum of diagrams with different degrees");
    }
    if (a.terms.empty()) return b;
    for (const auto& t : b.terms) a.terms.push_back(t);
    return a;
}

inline DiagramExpr expr_scale(const Cyc& c, DiagramExpr a) {
    if (c.is_zero()) {
        a.terms.clear();
        return a;
    }
    for (auto& t : a.terms) t.first = c * t.first;
    return a;
}

inline DiagramExpr expr_vcomp(const DiagramExpr& top, const DiagramExpr& bottom, int n) {
    if (bottom.bdy.target != top.bdy.source)
        throw DiagramError("vertical composition boundary mismatch: top needs " + word_str(top.bdy.source) +
                           " but bottom provides " + word_str(bottom.bdy.target));
    DiagramExpr out;
    out.bdy = {bottom.bdy.source, top.bdy.target};
    out.degree = top.degree + bottom.degree;
    for (const auto& [ct, dt] : top.terms)
        for (const auto& [cb, db] : bottom.terms) out.terms.emplace_back(ct * cb, Diagram::vcomp(dt, db));
    (void)n;
    return out;
}

inline DiagramExpr expr_hcomp(const DiagramExpr& left, const DiagramExpr& right) {
    DiagramExpr out;
    out.bdy.source = left.bdy.source;
    out.bdy.source.insert(out.bdy.source.end(), right.bdy.source.begin(), right.bdy.source.end());
    out.bdy.target = left.bdy.target;
    out.bdy.target.insert(out.bdy.target.end(), right.bdy.target.begin(), right.bdy.target.end());
    out.degree = left.degree + right.degree;
    for (const auto& [cl, dl] : left.terms)
        for (const auto& [cr, dr] : right.terms) out.terms.emplace_back(cl * cr, Diagram::hcomp(dl, dr));
    return out;
}

/// Formal Jones-Wenzl expansion: JW_0 = empty, JW_1 = id, and
/// JW_k = id (x) JW_{k-1} + [k-2]_q/[k-1]_q * (ext JW_{k-1}) o gadget o (ext JW_{k-1}).
/// Term count grows fast; meant for small k only (the evaluator uses the
/// memoized matrix recursion instead).
inline DiagramExpr jw_expr(const CyclotomicField* field, int k, Color leading) {
    if (k < 0) throw DiagramError("jw_expr: k must be >= 0");
    if (k == 0) return expr_from_diagram(Diagram::empty(), Cyc(field, 1), kInfinity);
    if (k == 1) return expr_from_diagram(Diagram::gen(GenKind::Id, leading), Cyc(field, 1), kInfinity);
    if (k > 8) throw DiagramError("jw_expr: expansion only supported for k <= 8");
    DiagramExpr prev = jw_expr(field, k - 1, leading);
    Color newcol = DihedralWord{leading, k}.letters()[0];
    DiagramExpr ext = expr_hcomp(expr_from_diagram(Diagram::gen(GenKind::Id, newcol), Cyc(field, 1), kInfinity), prev);
    Cyc denom = quantum_integer_q(field, k - 1);
    if (denom.is_zero()) throw DiagramError("jw_expr: [k-1]_q vanishes, JW_" + std::to_string(k) + " undefined");
    Cyc coeff = quantum_integer_q(field, k - 2) * denom.inverse();
    if (coeff.is_zero()) return ext;
    DiagramExpr gadget = expr_from_diagram(jw_gadget(k, leading), Cyc(field, 1), kInfinity);
    DiagramExpr wrapped = expr_vcomp(ext, expr_vcomp(gadget, ext, kInfinity), kInfinity);
    return expr_add(ext, expr_scale(coeff, wrapped));
}

// ------------------------------------------------------------ text format

inline std::string diagram_str(const Diagram& d) {
    switch (d.tag()) {
        case Diagram::Tag::Empty: return "empty";
        case Diagram::Tag::Gen: {
            std::string name;
            switch (d.kind()) {
                case GenKind::Id: name = "id"; break;
                case GenKind::EndDot: name = "enddot"; break;
                case GenKind::StartDot: name = "startdot"; break;
                case GenKind::Split: name = "split"; break;
                case GenKind::Merge: name = "merge"; break;
                case GenKind::Vertex2n: name = "vertex2n"; break;
            }
            return name + "(" + color_char(d.color()) + ")";
        }
        case Diagram::Tag::HComp: {
            auto wrap = [](const Diagram& x) {
                std::string s = diagram_str(x);
                return x.tag() == Diagram::Tag::VComp ? "(" + s + ")" : s;
            };
            return wrap(*d.left()) + " * " + wrap(*d.right());
        }
        case Diagram::Tag::VComp: {
            std::string top = diagram_str(*d.left());
            std::string bot = diagram_str(*d.right());
            if (d.right()->tag() == Diagram::Tag::VComp) bot = "(" + bot + ")";
            return top + " . " + bot;
        }
    }
    return "?";
}

inline std::string expr_str(const DiagramExpr& e) {
    if (e.terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& [c, d] = e.terms[i];
        if (i) os << " + ";
        if (!c.is_one()) os << "(" << c.str() << ") * ";
        os << diagram_str(*d);
    }
    return os.str();
}

// ------------------------------------------------------------ parser

namespace parser_detail {

struct Token {
    enum class Type { Ident, Int, Sym, End } type;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(s[i]))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Type::Ident, s.substr(start, i - start), start});
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Type::Int, s.substr(start, i - start), start});
        } else if (std::string("+-*./^(),").find(s[i]) != std::string::npos) {
            out.push_back({Token::Type::Sym, s.substr(i, 1), start});
            ++i;
        } else {
            throw DiagramError("syntax error at position " + std::to_string(i) + ": unexpected character '" + s[i] + "'");
        }
    }
    out.push_back({Token::Type::End, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(const std::string& text, const CyclotomicField* field, int n) : toks_(tokenize(text)), field_(field), n_(n) {}

    DiagramExpr parse() {
        DiagramExpr e = parse_expr();
        expect_end();
        return e;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool accept_sym(const std::string& s) {
        if (peek().type == Token::Type::Sym && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_sym(const std::string& s) {
        if (!accept_sym(s)) fail("expected '" + s + "'");
    }
    void expect_end() {
        if (peek().type != Token::Type::End) fail("trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw DiagramError("syntax error at position " + std::to_string(peek().pos) + ": " + msg);
    }

    DiagramExpr parse_expr() {
        DiagramExpr e = parse_term();
        while (peek().type == Token::Type::Sym && (peek().text == "+" || peek().text == "-")) {
            bool minus = next().text == "-";
            DiagramExpr t = parse_term();
            if (minus) t = expr_scale(Cyc(field_, -1), std::move(t));
            e = expr_add(std::move(e), t);
        }
        return e;
    }

    DiagramExpr parse_term() {
        // optional leading scalar followed by '*'
        std::size_t save = pos_;
        try {
            Cyc c = parse_scalar();
            if (accept_sym("*")) return expr_scale(c, parse_factor());
        } catch (const DiagramError&) {
        }
        pos_ = save;
        return parse_factor();
    }

    DiagramExpr parse_factor() {
        DiagramExpr e = parse_hchain();
        while (accept_sym(".")) {
            DiagramExpr below = parse_hchain();
            e = expr_vcomp(e, below, n_);  // left operand on top
        }
        return e;
    }

    DiagramExpr parse_hchain() {
        DiagramExpr e = parse_primary();
        while (accept_sym("*")) e = expr_hcomp(e, parse_primary());
        return e;
    }

    DiagramExpr parse_primary() {
        if (accept_sym("(")) {
            DiagramExpr e = parse_expr();
            expect_sym(")");
            return e;
        }
        if (peek().type != Token::Type::Ident) fail("expected a generator name");
        Token t = next();
        const std::string& name = t.text;
        if (name == "empty") return expr_from_diagram(Diagram::empty(), Cyc(field_, 1), n_);
        if (name == "jw") {
            expect_sym("(");
            int k = parse_int();
            expect_sym(",");
            Color c = parse_color();
            expect_sym(")");
            return jw_expr(field_, k, c);
        }
        GenKind kind;
        bool is_cup = false, is_cap = false;
        if (name == "id")
            kind = GenKind::Id;
        else if (name == "enddot")
            kind = GenKind::EndDot;
        else if (name == "startdot")
            kind = GenKind::StartDot;
        else if (name == "split")
            kind = GenKind::Split;
        else if (name == "merge")
            kind = GenKind::Merge;
        else if (name == "vertex2n")
            kind = GenKind::Vertex2n;
        else if (name == "cup")
            is_cup = true;
        else if (name == "cap")
            is_cap = true;
        else
            fail("unknown generator '" + name + "'");
        expect_sym("(");
        Color c = parse_color();
        expect_sym(")");
        DiagramPtr d = is_cup ? cup(c) : is_cap ? cap(c) : Diagram::gen(kind, c);
        return expr_from_diagram(std::move(d), Cyc(field_, 1), n_);
    }

    Color parse_color() {
        if (peek().type != Token::Type::Ident || (peek().text != "s" && peek().text != "t")) fail("expected color s or t");
        return next().text == "s" ? Color::S : Color::T;
    }

    int parse_int() {
        bool neg = accept_sym("-");
        if (peek().type != Token::Type::Int) fail("expected an integer");
        int v = std::stoi(next().text);
        return neg ? -v : v;
    }

    // scalar := ['-'] sterm (('+'|'-') sterm)*; sterm := satom+ (juxtaposition
    // multiplies); satom := INT ['/' INT] | q ['^' INT] | '(' scalar ')'
    Cyc parse_scalar() {
        bool neg = accept_sym("-");
        Cyc acc = parse_sterm();
        if (neg) acc = -acc;
        while (peek().type == Token::Type::Sym && (peek().text == "+" || peek().text == "-")) {
            // only continue if a scalar term follows; otherwise leave for the caller
            std::size_t save = pos_;
            bool minus = next().text == "-";
            try {
                Cyc t = parse_sterm();
                acc = minus ? acc - t : acc + t;
            } catch (const DiagramError&) {
                pos_ = save;
                break;
            }
        }
        return acc;
    }

    Cyc parse_sterm() {
        Cyc acc = parse_satom();
        while (true) {
            const Token& t = peek();
            if (t.type == Token::Type::Int || (t.type == Token::Type::Ident && t.text == "q") ||
                (t.type == Token::Type::Sym && t.text == "(")) {
                acc = acc * parse_satom();
            } else {
                break;
            }
        }
        return acc;
    }

    Cyc parse_satom() {
        if (field_ == nullptr) fail("scalar coefficients need a cyclotomic field (pass n)");
        if (peek().type == Token::Type::Int) {
            long num = std::stol(next().text);
            if (accept_sym("/")) {
                if (peek().type != Token::Type::Int) fail("expected denominator");
                long den = std::stol(next().text);
                return Cyc(field_, make_rational(num, den));
            }
            return Cyc(field_, num);
        }
        if (peek().type == Token::Type::Ident && peek().text == "q") {
            next();
            long e = 1;
            if (accept_sym("^")) e = parse_int();
            return Cyc::q_power(field_, e);
        }
        if (accept_sym("(")) {
            Cyc c = parse_scalar();
            expect_sym(")");
            return c;
        }
        fail("expected a scalar");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const CyclotomicField* field_;
    int n_;
};

}  // namespace parser_detail

/// Parses the diagram grammar ('.' vertical with left operand on top, '*'
/// horizontal with left operand leftmost). The field supplies scalar
/// coefficients; n is needed for vertex2n and jw atoms.
inline DiagramExpr parse_expr(const std::string& text, const CyclotomicField* field, int n) {
    return parser_detail::Parser(text, field, n).parse();
}

}  // namespace dicalc
