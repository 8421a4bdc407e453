#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dicalc/evaluate.hpp"
#include "dicalc/weighting.hpp"

namespace dicalc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::vector<const CheckResult*> failures() const {
        std::vector<const CheckResult*> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(&c);
        return out;
    }
};

namespace relations_detail {

template <class K>
CheckResult expect_equal(const std::string& name, const Morphism<K>& lhs, const Morphism<K>& rhs) {
    if (auto diff = first_difference(lhs, rhs)) return {name, false, *diff};
    return {name, true, ""};
}

template <class K>
CheckResult expect_zero(const std::string& name, const Morphism<K>& m) {
    if (m.is_zero()) return {name, true, ""};
    return {name, false, "nonzero image"};
}

}  // namespace relations_detail

/// Floating barbell of the color as an endomorphism of the regular bimodule:
/// e_i -> 2 lambda_i loop_i on the own color class, e_j -> -[2]_q lambda_j
/// loop_j on the other, everything of positive degree -> 0.
template <class K>
Morphism<K> barbell_endo(EvalContext<K>& ctx, Color c) {
    const WordBimodule* reg = ctx.cache->get({});
    Morphism<K> m = zero_morphism<K>(reg, reg, 2);
    K two = ctx.scalars.one() + ctx.scalars.one();
    K minus_two_q = -ctx.scalars.qint(2);
    for (const auto& v : ctx.alg->graph().vertices()) {
        int src = reg->index_of({ctx.alg->idempotent(v.id)});
        int dst = reg->index_of({ctx.alg->loop(v.id)});
        K coeff = (v.color == c) ? two * ctx.weight(v.id) : minus_two_q * ctx.weight(v.id);
        m.set(dst, src, coeff * ctx.tau * ctx.upsilon);
    }
    return m;
}

enum class RelationGroup : unsigned { EH = 1, Frobenius = 2, Needle = 4, Barbell = 8, Isotopy = 16, TwoNVertex = 32, JonesWenzl = 64 };

constexpr unsigned kAllRelations = 127;

/// Evaluates both sides of every defining relation of the calculus and
/// compares the resulting bimodule morphisms entry by entry.
template <class K>
SuiteReport relation_suite(EvalContext<K>& ctx, unsigned groups = kAllRelations) {
    using relations_detail::expect_equal;
    using relations_detail::expect_zero;
    SuiteReport report;
    auto id_c = [&](Color c) { return identity_on_word(ctx, {c}); };
    auto gen = [&](GenKind k, Color c) { return evaluate(ctx, *Diagram::gen(k, c)); };
    auto ten = [&](const Morphism<K>& a, const Morphism<K>& b) { return tensor_h(*ctx.cache, a, b); };
    const K one = ctx.scalars.one();
    const K two = one + one;
    const K two_q = ctx.scalars.qint(2);

    if (groups & static_cast<unsigned>(RelationGroup::EH)) {
        const GenKind kinds[] = {GenKind::EndDot, GenKind::StartDot, GenKind::Split, GenKind::Merge};
        for (Color cf : {Color::S, Color::T})
            for (Color cg : {Color::S, Color::T})
                for (GenKind kf : kinds)
                    for (GenKind kg : kinds) {
                        Morphism<K> f = gen(kf, cf), g = gen(kg, cg);
                        Morphism<K> side1 = compose(ten(f, identity_morphism(g.dst, one)), ten(identity_morphism(f.src, one), g));
                        Morphism<K> side2 = compose(ten(identity_morphism(f.dst, one), g), ten(f, identity_morphism(g.src, one)));
                        std::string name = "EH[" + diagram_str(*Diagram::gen(kf, cf)) + "," + diagram_str(*Diagram::gen(kg, cg)) + "]";
                        report.checks.push_back(expect_equal(name, side1, side2));
                    }
    }

    if (groups & static_cast<unsigned>(RelationGroup::Frobenius)) {
        for (Color c : {Color::S, Color::T}) {
            Morphism<K> sp = gen(GenKind::Split, c), me = gen(GenKind::Merge, c);
            Morphism<K> ed = gen(GenKind::EndDot, c), sd = gen(GenKind::StartDot, c);
            Morphism<K> id1 = id_c(c);
            std::string cs(1, color_char(c));
            Morphism<K> assoc1 = compose(ten(me, id1), ten(id1, sp));
            Morphism<K> assoc2 = compose(sp, me);
            Morphism<K> assoc3 = compose(ten(id1, me), ten(sp, id1));
            report.checks.push_back(expect_equal("Fr1(" + cs + ") left = middle", assoc1, assoc2));
            report.checks.push_back(expect_equal("Fr1(" + cs + ") middle = right", assoc2, assoc3));
            report.checks.push_back(expect_equal("Fr2(" + cs + ") dotted split left", compose(ten(ed, id1), sp), id1));
            report.checks.push_back(expect_equal("Fr2(" + cs + ") dotted split right", compose(ten(id1, ed), sp), id1));
            report.checks.push_back(expect_equal("Fr2(" + cs + ") mirror left", compose(me, ten(sd, id1)), id1));
            report.checks.push_back(expect_equal("Fr2(" + cs + ") mirror right", compose(me, ten(id1, sd)), id1));
        }
    }

    if (groups & static_cast<unsigned>(RelationGroup::Needle)) {
        for (Color c : {Color::S, Color::T}) {
            std::string cs(1, color_char(c));
            Morphism<K> needle = compose(evaluate(ctx, *cap(c)), gen(GenKind::Split, c));
            report.checks.push_back(expect_zero("Ne(" + cs + ")", needle));
            Morphism<K> mirrored = compose(gen(GenKind::Merge, c), evaluate(ctx, *cup(c)));
            report.checks.push_back(expect_zero("Ne(" + cs + ") mirror", mirrored));
        }
    }

    if (groups & static_cast<unsigned>(RelationGroup::Barbell)) {
        for (Color c : {Color::S, Color::T}) {
            std::string cs(1, color_char(c));
            Color d = opposite(c);
            Morphism<K> id1 = id_c(c);
            Morphism<K> bb_same = compose(gen(GenKind::EndDot, c), gen(GenKind::StartDot, c));
            Morphism<K> bb_other = compose(gen(GenKind::EndDot, d), gen(GenKind::StartDot, d));
            Morphism<K> broken = compose(gen(GenKind::StartDot, c), gen(GenKind::EndDot, c));
            // BF1: barbell left of the strand = 2 (broken strand) - barbell right
            Morphism<K> lhs1 = ten(bb_same, id1);
            Morphism<K> rhs1 = add(scale(two, broken), scale(-one, ten(id1, bb_same)));
            report.checks.push_back(expect_equal("BF1(" + cs + ")", lhs1, rhs1));
            // BF2 (Remark form): 2 (B_d x id - id x B_d) = -[2]_q (B_c x id - id x B_c)
            Morphism<K> lhs2 = scale(two, add(ten(bb_other, id1), scale(-one, ten(id1, bb_other))));
            Morphism<K> rhs2 = scale(-two_q, add(ten(bb_same, id1), scale(-one, ten(id1, bb_same))));
            report.checks.push_back(expect_equal("BF2(" + cs + ")", lhs2, rhs2));
            // BF2' as a consequence: B_d x id = id x B_d + [2]_q id x B_c - [2]_q broken
            Morphism<K> rhs3 = add(add(ten(id1, bb_other), scale(two_q, ten(id1, bb_same))), scale(-two_q, broken));
            report.checks.push_back(expect_equal("BF2'(" + cs + ")", ten(bb_other, id1), rhs3));
        }
    }

    if (groups & static_cast<unsigned>(RelationGroup::Isotopy)) {
        for (Color c : {Color::S, Color::T}) {
            std::string cs(1, color_char(c));
            Morphism<K> id1 = id_c(c);
            Morphism<K> cupm = evaluate(ctx, *cup(c)), capm = evaluate(ctx, *cap(c));
            report.checks.push_back(
                expect_equal("zigzag(" + cs + ") left", compose(ten(capm, id1), ten(id1, cupm)), id1));
            report.checks.push_back(
                expect_equal("zigzag(" + cs + ") right", compose(ten(id1, capm), ten(cupm, id1)), id1));
            Morphism<K> ed = gen(GenKind::EndDot, c), sd = gen(GenKind::StartDot, c);
            report.checks.push_back(
                expect_equal("dot isotopy(" + cs + ") right", compose(capm, ten(id1, sd)), ed));
            report.checks.push_back(
                expect_equal("dot isotopy(" + cs + ") left", compose(capm, ten(sd, id1)), ed));
            Morphism<K> sp = gen(GenKind::Split, c), me = gen(GenKind::Merge, c);
            report.checks.push_back(
                expect_equal("trivalent isotopy(" + cs + ") right", compose(ten(me, id1), ten(id1, cupm)), sp));
            report.checks.push_back(
                expect_equal("trivalent isotopy(" + cs + ") left", compose(ten(id1, me), ten(cupm, id1)), sp));
        }
    }

    if (ctx.n != kInfinity && (groups & static_cast<unsigned>(RelationGroup::TwoNVertex))) {
        for (Color c : {Color::S, Color::T}) {
            std::string cs(1, color_char(c));
            Morphism<K> v2n = gen(GenKind::Vertex2n, c);
            report.checks.push_back(expect_zero("2nv vertex (" + cs + "-bottom) = 0", v2n));
            // 2nv1: a split on the rightmost top strand; both sides contain a
            // 2n-vertex, so both evaluate to zero
            std::vector<Color> top = DihedralWord{opposite(c), ctx.n}.letters();
            Morphism<K> id_rest = identity_on_word(ctx, std::vector<Color>(top.begin(), top.end() - 1));
            Morphism<K> lhs = compose(ten(id_rest, gen(GenKind::Split, top.back())), v2n);
            report.checks.push_back(expect_zero("2nv1(" + cs + ") both sides 0", lhs));
            // 2nv3: rotation isotopy; bend the rightmost bottom strand up
            std::vector<Color> bot = v2n.src->word();
            Morphism<K> id_bot_rest = identity_on_word(ctx, std::vector<Color>(bot.begin(), bot.end() - 1));
            Morphism<K> rot = compose(ten(v2n, id_c(bot.back())), ten(id_bot_rest, evaluate(ctx, *cup(bot.back()))));
            report.checks.push_back(expect_zero("2nv3(" + cs + ") both sides 0", rot));
        }
    }

    if (ctx.n != kInfinity && (groups & static_cast<unsigned>(RelationGroup::JonesWenzl))) {
        for (Color c : {Color::S, Color::T}) {
            std::string cs(1, color_char(c));
            const Morphism<K>& jw = jw_morphism(ctx, ctx.n, c);
            report.checks.push_back(expect_zero("2nv2: JW_n = 0 (leading " + cs + ")", jw));
        }
    }

    return report;
}

// ----------------------------------------------------- coinvariant descent

/// Polynomial in the two commuting formal barbell symbols, coefficients in K;
/// key = (degree in b_s, degree in b_t).
template <class K>
using BarbellPoly = std::map<std::pair<int, int>, K>;

template <class K>
BarbellPoly<K> barbell_poly_mul(const BarbellPoly<K>& a, const BarbellPoly<K>& b) {
    BarbellPoly<K> out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, va * vb);
            else
                it->second = it->second + va * vb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = ScalarTraits<K>::negligible(it->second) ? out.erase(it) : std::next(it);
    return out;
}

/// z = b_s^2 - [2]_q b_s b_t + b_t^2.
template <class K>
BarbellPoly<K> coinvariant_z(EvalContext<K>& ctx) {
    BarbellPoly<K> z;
    z[{2, 0}] = ctx.scalars.one();
    z[{1, 1}] = -ctx.scalars.qint(2);
    z[{0, 2}] = ctx.scalars.one();
    return z;
}

/// Z = product over all w in W_n of w(2 b_s + [2]_q b_t), where the dihedral
/// group acts on linear forms by s(b_s) = b_s, t(b_s) = b_s - [2]_q b_t and
/// symmetrically.
template <class K>
BarbellPoly<K> coinvariant_Z(EvalContext<K>& ctx) {
    if (ctx.n == kInfinity) throw EvalError("coinvariant_Z: needs finite n");
    const K one = ctx.scalars.one();
    const K two_q = ctx.scalars.qint(2);
    auto act = [&](Color g, std::pair<K, K> form) {  // form = (coeff of b_s, coeff of b_t)
        if (g == Color::S)
            return std::make_pair(form.first - two_q * form.second, form.second);
        return std::make_pair(form.first, form.second - two_q * form.first);
    };
    // enumerate W_n: empty word, two words per length 1..n-1, one of length n
    std::vector<std::vector<Color>> words{{}};
    for (int len = 1; len < ctx.n; ++len)
        for (Color rm : {Color::S, Color::T}) words.push_back(DihedralWord{rm, len}.letters());
    words.push_back(DihedralWord{Color::S, ctx.n}.letters());

    BarbellPoly<K> out;
    out[{0, 0}] = one;
    for (const auto& w : words) {
        std::pair<K, K> form{one + one, two_q};  // 2 b_s + [2]_q b_t
        for (auto it = w.rbegin(); it != w.rend(); ++it) form = act(*it, form);
        BarbellPoly<K> lin;
        if (!ScalarTraits<K>::negligible(form.first)) lin[{1, 0}] = form.first;
        if (!ScalarTraits<K>::negligible(form.second)) lin[{0, 1}] = form.second;
        out = barbell_poly_mul(out, lin);
    }
    return out;
}

/// Substitute the barbell endomorphisms for the formal symbols.
template <class K>
Morphism<K> barbell_poly_image(EvalContext<K>& ctx, const BarbellPoly<K>& poly) {
    const WordBimodule* reg = ctx.cache->get({});
    Morphism<K> bs = barbell_endo(ctx, Color::S), bt = barbell_endo(ctx, Color::T);
    int degree = 0;
    for (const auto& [key, coeff] : poly) degree = std::max(degree, 2 * (key.first + key.second));
    Morphism<K> out = zero_morphism<K>(reg, reg, degree);
    for (const auto& [key, coeff] : poly) {
        Morphism<K> term = identity_morphism(reg, ctx.scalars.one());
        for (int i = 0; i < key.first; ++i) term = compose(term, bs);
        for (int i = 0; i < key.second; ++i) term = compose(term, bt);
        term.degree = degree;
        out = add(out, scale(coeff, term));
    }
    return out;
}

/// The two scalar descent checks from the coinvariant-algebra quotient:
/// the images of z and Z vanish, every monomial has total degree >= 2, and
/// the partial product (2 b_s + [2] b_t) s(2 b_s + [2] b_t) is already zero.
template <class K>
SuiteReport coinvariant_checks(EvalContext<K>& ctx) {
    using relations_detail::expect_zero;
    SuiteReport report;
    const K one = ctx.scalars.one();
    const K two_q = ctx.scalars.qint(2);

    BarbellPoly<K> z = coinvariant_z(ctx);
    BarbellPoly<K> Z = coinvariant_Z(ctx);
    bool degrees_ok = true;
    for (const auto& [key, coeff] : z)
        if (key.first + key.second < 2) degrees_ok = false;
    for (const auto& [key, coeff] : Z)
        if (key.first + key.second < 2) degrees_ok = false;
    report.checks.push_back({"z, Z have no monomials of degree < 2", degrees_ok, ""});
    report.checks.push_back(expect_zero("G(z) = 0", barbell_poly_image(ctx, z)));
    report.checks.push_back(expect_zero("G(Z) = 0", barbell_poly_image(ctx, Z)));

    BarbellPoly<K> form1, form2;
    form1[{1, 0}] = one + one;
    form1[{0, 1}] = two_q;
    form2[{1, 0}] = (one + one) - two_q * two_q;  // s(2 b_s + [2] b_t)
    form2[{0, 1}] = two_q;
    report.checks.push_back(
        expect_zero("(2b_s+[2]b_t) s(2b_s+[2]b_t) = 0", barbell_poly_image(ctx, barbell_poly_mul(form1, form2))));
    return report;
}

}  // namespace dicalc
