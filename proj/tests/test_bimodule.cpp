#include <catch2/catch_amalgamated.hpp>

#include "dicalc/bimodule.hpp"
#include "dicalc/evaluate.hpp"
#include "dicalc/weighting.hpp"

using namespace dicalc;

namespace {

EvalContext<Cyc> a2_context(const ZigzagAlgebra& alg, BimoduleCache& cache, const CyclotomicField& f) {
    std::map<int, Cyc> lambda{{1, Cyc(&f, 1)}, {2, -quantum_integer_q(&f, 2)}};
    return make_context<Cyc>(&alg, &cache, ScalarField<Cyc>{&f}, std::move(lambda), static_cast<int>(f.n()));
}

}  // namespace

TEST_CASE("word bimodule bases on the 2-vertex path") {
    ZigzagAlgebra alg(type_a_graph(2));
    WordBimodule ws(&alg, {Color::S});
    CHECK(ws.dim() == 9);  // P_1 and _1P have three basis paths each
    bool found_min = false, found_max = false;
    for (const auto& e : ws.basis()) {
        CHECK(e.verts == std::vector<int>{1});
        if (e.degree == -1) found_min = true;
        if (e.degree == 3) found_max = true;
    }
    CHECK(found_min);  // e (x) e
    CHECK(found_max);  // loop (x) loop

    WordBimodule wss(&alg, {Color::S, Color::S});
    CHECK(wss.dim() == 18);  // 3 * 2 * 3, single summand (1,1)

    WordBimodule wst(&alg, {Color::S, Color::T});
    // summand (1,2) only; middle factor is the single arrow 1|2
    CHECK(wst.dim() == 9);

    WordBimodule empty(&alg, {});
    CHECK(empty.dim() == alg.dim());
}

TEST_CASE("left and right actions") {
    ZigzagAlgebra alg(type_a_graph(2));
    WordBimodule ws(&alg, {Color::S});
    int e1 = alg.idempotent(1), l1 = alg.loop(1), a21 = alg.arrow(2, 1);
    int b = ws.index_of({e1, e1});
    CHECK(ws.left_act(e1, b) == b);
    CHECK(ws.left_act(l1, b) == ws.index_of({l1, e1}));
    CHECK(ws.left_act(a21, b) == ws.index_of({a21, e1}));
    CHECK(ws.left_act(alg.idempotent(2), b) == -1);
    CHECK(ws.right_act(b, l1) == ws.index_of({e1, l1}));
    int lb = ws.index_of({l1, e1});
    CHECK(ws.left_act(l1, lb) == -1);  // loop . loop = 0
}

TEST_CASE("theta matrices reproduce the printed 3x3 and 4x4 matrices") {
    Laurent two = quantum_integer_v(2), one(1), zero;
    ZigzagAlgebra a3(type_a_graph(3));
    LaurentMatrix ms = theta_matrix(a3, Color::S);
    // basis order: P_1, P_3 (s-vertices), P_2 (t-vertex)
    LaurentMatrix ms_expected{{two, zero, one}, {zero, two, one}, {zero, zero, zero}};
    LaurentMatrix mt_expected{{zero, zero, zero}, {zero, zero, zero}, {one, one, two}};
    CHECK(laurent_mat_equal(ms, ms_expected));
    CHECK(laurent_mat_equal(theta_matrix(a3, Color::T), mt_expected));

    ZigzagAlgebra affine(cycle_graph(4));
    // s-vertices 1,3 then t-vertices 2,4; every s adjacent to every t
    LaurentMatrix affine_s_expected{{two, zero, one, one}, {zero, two, one, one}, {zero, zero, zero, zero}, {zero, zero, zero, zero}};
    LaurentMatrix affine_t_expected{{zero, zero, zero, zero}, {zero, zero, zero, zero}, {one, one, two, zero}, {one, one, zero, two}};
    CHECK(laurent_mat_equal(theta_matrix(affine, Color::S), affine_s_expected));
    CHECK(laurent_mat_equal(theta_matrix(affine, Color::T), affine_t_expected));

    ZigzagAlgebra a1(type_a_graph(1));
    CHECK(laurent_mat_equal(theta_matrix(a1, Color::S), LaurentMatrix{{two}}));
}

TEST_CASE("trace-level closed form of the alternating theta products") {
    // [Theta_(s...)] for products starting with Theta_s on the left equals
    // the block forms with AA^T powers
    for (const auto& g : {type_a_graph(4), type_d_graph(4), type_e_graph(6)}) {
        ZigzagAlgebra alg(g);
        LaurentMatrix ms = theta_matrix(alg, Color::S), mt = theta_matrix(alg, Color::T);
        auto blk = g.adjacency_block();
        std::size_t ns = g.s_count(), nt = g.t_count(), n = ns + nt;
        Laurent two = quantum_integer_v(2);

        // integer matrices A, AA^T as Laurent matrices
        LaurentMatrix a = laurent_zero_matrix(ns, nt);
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < nt; ++j) a[i][j] = Laurent(blk[i][j]);
        LaurentMatrix aat = laurent_zero_matrix(ns, ns);
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j) {
                Laurent sum;
                for (std::size_t k = 0; k < nt; ++k) sum += a[i][k] * a[j][k];
                aat[i][j] = sum;
            }

        for (int k = 1; k <= 6; ++k) {
            LaurentMatrix prod = alternating_theta_product(ms, mt, k, Color::S);
            // closed form: top block rows only
            LaurentMatrix top;  // ns x n
            if (k % 2 == 1) {
                // (AA^T)^((k-1)/2) * [ [2]_v I | A ]
                LaurentMatrix base = laurent_zero_matrix(ns, n);
                for (std::size_t i = 0; i < ns; ++i) {
                    base[i][i] = two;
                    for (std::size_t j = 0; j < nt; ++j) base[i][ns + j] = a[i][j];
                }
                LaurentMatrix pw = laurent_zero_matrix(ns, ns);
                for (std::size_t i = 0; i < ns; ++i) pw[i][i] = Laurent(1);
                for (int p = 0; p < (k - 1) / 2; ++p) pw = laurent_mat_mul(pw, aat);
                top = laurent_mat_mul(pw, base);
            } else {
                // (AA^T)^((k-2)/2) * [ AA^T | [2]_v A ]
                LaurentMatrix base = laurent_zero_matrix(ns, n);
                for (std::size_t i = 0; i < ns; ++i) {
                    for (std::size_t j = 0; j < ns; ++j) base[i][j] = aat[i][j];
                    for (std::size_t j = 0; j < nt; ++j) base[i][ns + j] = two * a[i][j];
                }
                LaurentMatrix pw = laurent_zero_matrix(ns, ns);
                for (std::size_t i = 0; i < ns; ++i) pw[i][i] = Laurent(1);
                for (int p = 0; p < (k - 2) / 2; ++p) pw = laurent_mat_mul(pw, aat);
                top = laurent_mat_mul(pw, base);
            }
            for (std::size_t i = 0; i < ns; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK(prod[i][j] == top[i][j]);
            for (std::size_t i = ns; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK(prod[i][j].is_zero());
        }
    }
}

TEST_CASE("theta_apply matches eq 2.9 case split") {
    BipartiteGraph a2 = type_a_graph(2);
    ProjectiveDecomposition start{{{1, 0}, 1}};
    ProjectiveDecomposition after_s = theta_apply(a2, Color::S, start);
    CHECK(after_s == ProjectiveDecomposition{{{1, -1}, 1}, {{1, 1}, 1}});
    ProjectiveDecomposition p2{{{2, 0}, 1}};
    CHECK(theta_apply(a2, Color::S, p2) == ProjectiveDecomposition{{{1, 0}, 1}});
    ProjectiveDecomposition shifted{{{1, 2}, 1}};
    CHECK(theta_apply(a2, Color::T, shifted) == ProjectiveDecomposition{{{2, 2}, 1}});
}

TEST_CASE("theta_apply along a word counts the graded tensor basis") {
    // iterate theta along the word and compare with brute-force counting of
    // basis elements of B_w (x) P_i by their head projective and shift
    for (const auto& g : {type_a_graph(3), type_d_graph(4), type_a_graph(6)}) {
        ZigzagAlgebra alg(g);
        std::vector<std::vector<Color>> words{
            {Color::S}, {Color::T, Color::S}, {Color::S, Color::T, Color::S}, {Color::T, Color::S, Color::T, Color::S}};
        for (const auto& word : words) {
            for (const auto& vstart : g.vertices()) {
                ProjectiveDecomposition dec{{{vstart.id, 0}, 1}};
                for (auto it = word.rbegin(); it != word.rend(); ++it) dec = theta_apply(g, *it, dec);

                // brute force: tensor basis of B_word (x)_{QG} P_i. Appending
                // the extra P_i factor replaces the tail slot by the middle
                // factor basis of _{i_1}P_{i}.
                ProjectiveDecomposition counted;
                WordBimodule wb(&alg, word);
                // enumerate (tail summand vertex, remaining factors)
                for (const auto& e : wb.basis()) {
                    int tail_vertex = e.verts.back();
                    int tail_factor = e.factors.back();
                    const PathElement& tail = alg.element(tail_factor);
                    // tail must be replaced: only elements of _{i_1}P_{i} with
                    // i = vstart survive, i.e. paths from vstart to i_1
                    bool keep = false;
                    int middle_deg = 0;
                    if (tail_vertex == vstart.id && tail.kind != PathKind::Arrow) {
                        keep = true;  // e or loop
                        middle_deg = tail.degree();
                    } else if (tail.kind == PathKind::Arrow && tail.source == vstart.id && tail.target == tail_vertex) {
                        keep = true;
                        middle_deg = 1;
                    }
                    if (!keep) continue;
                    (void)middle_deg;
                    int head_vertex = e.verts.front();
                    const PathElement& head = alg.element(e.factors.front());
                    if (head.kind != PathKind::Idempotent) continue;  // count P_{head} copies via idempotent heads
                    int shift = e.degree;                             // degree of the element with idempotent head
                    counted[{head_vertex, shift}] += 1;
                }
                CHECK(dec == counted);
            }
        }
    }
}

TEST_CASE("morphism algebra basics") {
    ZigzagAlgebra alg(type_a_graph(2));
    BimoduleCache cache(&alg);
    CyclotomicField f(3);
    auto ctx = a2_context(alg, cache, f);

    Morphism<Cyc> id_s = identity_on_word(ctx, {Color::S});
    CHECK(morphism_equal(compose(id_s, id_s), id_s));
    Morphism<Cyc> ed = enddot_image(ctx, Color::S);
    CHECK(morphism_equal(compose(id_s, ed), compose(id_s, ed)));
    CHECK(morphism_equal(compose(identity_on_word(ctx, {}), ed), ed));
    CHECK(check_degree_homogeneous(ed));
    CHECK(ed.degree == 1);
}

TEST_CASE("tensor_h is associative and unital") {
    ZigzagAlgebra alg(type_a_graph(3));
    BimoduleCache cache(&alg);
    CyclotomicField f(4);
    std::map<int, Cyc> lambda;
    auto table = weighting_for_graph(type_a_graph(3), ADEType{ADEFamily::A, 3, 4}, &f);
    auto ctx = make_context<Cyc>(&alg, &cache, ScalarField<Cyc>{&f}, table, 4);

    Morphism<Cyc> sd = startdot_image(ctx, Color::S);
    Morphism<Cyc> me = merge_image(ctx, Color::T);
    Morphism<Cyc> id_t = identity_on_word(ctx, {Color::T});

    Morphism<Cyc> left = tensor_h(cache, tensor_h(cache, sd, me), id_t);
    Morphism<Cyc> right = tensor_h(cache, sd, tensor_h(cache, me, id_t));
    CHECK(morphism_equal(left, right));

    Morphism<Cyc> id_empty = identity_on_word(ctx, {});
    CHECK(morphism_equal(tensor_h(cache, id_empty, sd), sd));
    CHECK(morphism_equal(tensor_h(cache, sd, id_empty), sd));
}

TEST_CASE("generator images are equivariant bimodule maps") {
    for (const auto& g : {type_a_graph(2), type_a_graph(3), type_d_graph(4)}) {
        auto ade = recognize_ade(g);
        REQUIRE(ade);
        CyclotomicField f(static_cast<unsigned>(ade->coxeter));
        ZigzagAlgebra alg(g);
        BimoduleCache cache(&alg);
        auto ctx = make_context<Cyc>(&alg, &cache, ScalarField<Cyc>{&f}, weighting_for_graph(g, *ade, &f),
                                     ade->coxeter);
        for (Color c : {Color::S, Color::T}) {
            for (GenKind k : {GenKind::EndDot, GenKind::StartDot, GenKind::Split, GenKind::Merge}) {
                Morphism<Cyc> m = evaluate(ctx, *Diagram::gen(k, c));
                INFO(diagram_str(*Diagram::gen(k, c)));
                CHECK(check_degree_homogeneous(m));
                CHECK(check_equivariance(m));
            }
        }
    }
}

TEST_CASE("equivariance detects a broken map") {
    ZigzagAlgebra alg(type_a_graph(2));
    BimoduleCache cache(&alg);
    CyclotomicField f(3);
    auto ctx = a2_context(alg, cache, f);
    const WordBimodule* ws = cache.get({Color::S});
    Morphism<Cyc> bad = zero_morphism<Cyc>(ws, ws, 0);
    bad.set(1, 0, Cyc(&f, 1));  // a single random entry breaks equivariance
    CHECK_FALSE(check_equivariance(bad));
}
