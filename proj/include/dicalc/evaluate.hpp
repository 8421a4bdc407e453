#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "dicalc/bimodule.hpp"
#include "dicalc/diagram.hpp"

namespace dicalc {

template <class K>
struct ScalarField;

template <>
struct ScalarField<Cyc> {
    const CyclotomicField* field = nullptr;
    Cyc one() const { return Cyc(field, 1); }
    Cyc qint(int k) const { return quantum_integer_q(field, k); }
    static Cyc divide(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
    Cyc from_cyc(const Cyc& c) const { return c; }
};

template <>
struct ScalarField<std::complex<double>> {
    std::complex<double> q{1.0, 0.0};
    std::complex<double> one() const { return {1.0, 0.0}; }
    std::complex<double> qint(int k) const {
        std::complex<double> sum(0.0, 0.0);
        for (int e = k - 1; e >= 1 - k; e -= 2) sum += std::pow(q, e);
        return sum;
    }
    static std::complex<double> divide(const std::complex<double>& a, const std::complex<double>& b) { return a / b; }
    std::complex<double> from_cyc(const Cyc& c) const { return c.embed(); }
};

struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Everything the generator assignment needs: the algebra, a bimodule cache,
/// the weighting, the scalar arithmetic, n, and the optional rescaling of the
/// four generators (start dot * tau, merge * 1/tau, end dot * upsilon,
/// split * 1/upsilon).
template <class K>
struct EvalContext {
    const ZigzagAlgebra* alg = nullptr;
    BimoduleCache* cache = nullptr;
    ScalarField<K> scalars;
    std::map<int, K> lambda;  // vertex id -> weight
    int n = kInfinity;
    K tau, upsilon;
    std::map<std::pair<int, Color>, Morphism<K>> jw_memo;

    const K& weight(int vertex) const {
        auto it = lambda.find(vertex);
        if (it == lambda.end()) throw EvalError("missing weight for vertex " + std::to_string(vertex));
        return it->second;
    }
};

template <class K>
EvalContext<K> make_context(const ZigzagAlgebra* alg, BimoduleCache* cache, ScalarField<K> scalars, std::map<int, K> lambda,
                            int n) {
    EvalContext<K> ctx;
    ctx.alg = alg;
    ctx.cache = cache;
    ctx.scalars = scalars;
    ctx.lambda = std::move(lambda);
    ctx.n = n;
    ctx.tau = ctx.scalars.one();
    ctx.upsilon = ctx.scalars.one();
    return ctx;
}

// ----------------------------------------------------- generator images

/// End dot: multiplication P_i{-1} (x) _iP -> QG.
template <class K>
Morphism<K> enddot_image(EvalContext<K>& ctx, Color c) {
    const WordBimodule* src = ctx.cache->get({c});
    const WordBimodule* dst = ctx.cache->get({});
    Morphism<K> m = zero_morphism<K>(src, dst, 1);
    for (std::size_t j = 0; j < src->dim(); ++j) {
        const auto& e = src->element(static_cast<int>(j));
        int p = ctx.alg->multiply(e.factors[0], e.factors[1]);
        if (p >= 0) m.set(dst->index_of({p}), static_cast<int>(j), ctx.upsilon);
    }
    return m;
}

/// Start dot on idempotents: e_i -> lambda_i (e_i (x) loop_i + loop_i (x) e_i)
/// for i of the dot's color, e_j -> sum over c-colored neighbors
/// lambda_i j|i (x) i|j; extended to all of QG by the left action.
template <class K>
Morphism<K> startdot_image(EvalContext<K>& ctx, Color c) {
    const WordBimodule* src = ctx.cache->get({});
    const WordBimodule* dst = ctx.cache->get({c});
    Morphism<K> m = zero_morphism<K>(src, dst, 1);
    const auto& g = ctx.alg->graph();
    for (const auto& v : g.vertices()) {
        std::map<int, K> image;  // of the idempotent e_v
        if (v.color == c) {
            K w = ctx.tau * ctx.weight(v.id);
            image[dst->index_of({ctx.alg->idempotent(v.id), ctx.alg->loop(v.id)})] = w;
            image[dst->index_of({ctx.alg->loop(v.id), ctx.alg->idempotent(v.id)})] = w;
        } else {
            for (int nb : g.neighbors(v.id)) {
                K w = ctx.tau * ctx.weight(nb);
                image[dst->index_of({ctx.alg->arrow(v.id, nb), ctx.alg->arrow(nb, v.id)})] = w;
            }
        }
        // f(p) = p . f(e_{source(p)}) for the paths starting at v
        for (int p : ctx.alg->projective_left_basis(v.id)) {
            int src_idx = src->index_of({p});
            for (const auto& [i, w] : image) {
                int pi = dst->left_act(p, i);
                if (pi >= 0) m.accumulate(pi, src_idx, w);
            }
        }
    }
    return m;
}

/// Split: x (x) y -> x (x) e_i (x) y.
template <class K>
Morphism<K> split_image(EvalContext<K>& ctx, Color c) {
    const WordBimodule* src = ctx.cache->get({c});
    const WordBimodule* dst = ctx.cache->get({c, c});
    Morphism<K> m = zero_morphism<K>(src, dst, -1);
    K coeff = ScalarField<K>::divide(ctx.scalars.one(), ctx.upsilon);
    for (std::size_t j = 0; j < src->dim(); ++j) {
        const auto& e = src->element(static_cast<int>(j));
        m.set(dst->index_of({e.factors[0], ctx.alg->idempotent(e.verts[0]), e.factors[1]}), static_cast<int>(j), coeff);
    }
    return m;
}

/// Merge: x (x) e_i (x) y -> 0, x (x) loop_i (x) y -> 1/lambda_i x (x) y.
template <class K>
Morphism<K> merge_image(EvalContext<K>& ctx, Color c) {
    const WordBimodule* src = ctx.cache->get({c, c});
    const WordBimodule* dst = ctx.cache->get({c});
    Morphism<K> m = zero_morphism<K>(src, dst, -1);
    for (std::size_t j = 0; j < src->dim(); ++j) {
        const auto& e = src->element(static_cast<int>(j));
        if (ctx.alg->element(e.factors[1]).kind != PathKind::Loop) continue;
        K coeff = ScalarField<K>::divide(ctx.scalars.one(), ctx.tau * ctx.weight(e.verts[0]));
        m.set(dst->index_of({e.factors[0], e.factors[2]}), static_cast<int>(j), coeff);
    }
    return m;
}

/// 2n-vertex: the zero map between the two length-n alternating words.
template <class K>
Morphism<K> vertex2n_image(EvalContext<K>& ctx, Color bottom_rightmost) {
    if (ctx.n == kInfinity) throw EvalError("2n-vertex needs a finite n");
    const WordBimodule* src = ctx.cache->get(DihedralWord{bottom_rightmost, ctx.n}.letters());
    const WordBimodule* dst = ctx.cache->get(DihedralWord{opposite(bottom_rightmost), ctx.n}.letters());
    return zero_morphism<K>(src, dst, 0);
}

// ----------------------------------------------------- evaluation

template <class K>
Morphism<K> evaluate(EvalContext<K>& ctx, const Diagram& d) {
    switch (d.tag()) {
        case Diagram::Tag::Empty: return identity_morphism(ctx.cache->get({}), ctx.scalars.one());
        case Diagram::Tag::Gen:
            switch (d.kind()) {
                case GenKind::Id: return identity_morphism(ctx.cache->get({d.color()}), ctx.scalars.one());
                case GenKind::EndDot: return enddot_image(ctx, d.color());
                case GenKind::StartDot: return startdot_image(ctx, d.color());
                case GenKind::Split: return split_image(ctx, d.color());
                case GenKind::Merge: return merge_image(ctx, d.color());
                case GenKind::Vertex2n: return vertex2n_image(ctx, d.color());
            }
            throw EvalError("unknown generator");
        case Diagram::Tag::HComp: return tensor_h(*ctx.cache, evaluate(ctx, *d.left()), evaluate(ctx, *d.right()));
        case Diagram::Tag::VComp: return compose(evaluate(ctx, *d.left()), evaluate(ctx, *d.right()));
    }
    throw EvalError("unreachable");
}

template <class K>
Morphism<K> evaluate(EvalContext<K>& ctx, const DiagramExpr& e) {
    const WordBimodule* src = ctx.cache->get(e.bdy.source);
    const WordBimodule* dst = ctx.cache->get(e.bdy.target);
    Morphism<K> out = zero_morphism<K>(src, dst, e.degree);
    for (const auto& [c, d] : e.terms) out = add(out, scale(ctx.scalars.from_cyc(c), evaluate(ctx, *d)));
    return out;
}

template <class K>
Morphism<K> evaluate(EvalContext<K>& ctx, const std::string& text, const CyclotomicField* field) {
    return evaluate(ctx, parse_expr(text, field, ctx.n));
}

/// Identity morphism on the bimodule of a word.
template <class K>
Morphism<K> identity_on_word(EvalContext<K>& ctx, const std::vector<Color>& word) {
    return identity_morphism(ctx.cache->get(word), ctx.scalars.one());
}

// ----------------------------------------------------- Jones-Wenzl

/// Memoized matrix-level Wenzl recursion
///   M_k = ext(M_{k-1}) + [k-2]_q/[k-1]_q ext(M_{k-1}) o T_k o ext(M_{k-1}),
/// ext = new identity strand on the left, T_k the dotted merge/split gadget.
template <class K>
const Morphism<K>& jw_morphism(EvalContext<K>& ctx, int k, Color leading) {
    if (k < 0) throw EvalError("jw_morphism: k must be >= 0");
    auto key = std::make_pair(k, leading);
    auto it = ctx.jw_memo.find(key);
    if (it != ctx.jw_memo.end()) return it->second;

    Morphism<K> result;
    if (k == 0) {
        result = identity_morphism(ctx.cache->get({}), ctx.scalars.one());
    } else if (k == 1) {
        result = identity_morphism(ctx.cache->get({leading}), ctx.scalars.one());
    } else {
        if (ScalarTraits<K>::negligible(ctx.scalars.qint(k - 1)))
            throw EvalError("JW_" + std::to_string(k) + " undefined: [" + std::to_string(k - 1) + "]_q = 0");
        const Morphism<K>& prev = jw_morphism(ctx, k - 1, leading);
        Color newcol = DihedralWord{leading, k}.letters()[0];
        Morphism<K> ext = tensor_h(*ctx.cache, identity_on_word(ctx, {newcol}), prev);
        K coeff = ScalarField<K>::divide(ctx.scalars.qint(k - 2), ctx.scalars.qint(k - 1));
        if (ScalarTraits<K>::negligible(coeff)) {
            result = std::move(ext);
        } else {
            Morphism<K> gadget = evaluate(ctx, *jw_gadget(k, leading));
            result = add(ext, scale(coeff, compose(ext, compose(gadget, ext))));
        }
    }
    auto [pos, inserted] = ctx.jw_memo.emplace(key, std::move(result));
    (void)inserted;
    return pos->second;
}

}  // namespace dicalc
