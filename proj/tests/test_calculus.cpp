#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dicalc/dicalc.hpp"

using namespace dicalc;

namespace {

struct ExactSetup {
    BipartiteGraph graph;
    CyclotomicField field;
    ZigzagAlgebra alg;
    BimoduleCache cache;
    EvalContext<Cyc> ctx;

    ExactSetup(BipartiteGraph g, int n, const ADEType& type)
        : graph(g),
          field(static_cast<unsigned>(n)),
          alg(graph),
          cache(&alg),
          ctx(make_context<Cyc>(&alg, &cache, ScalarField<Cyc>{&field}, weighting_for_graph(graph, type, &field), n)) {}
};

ExactSetup a2_setup() { return ExactSetup(type_a_graph(2), 3, ADEType{ADEFamily::A, 2, 3}); }
ExactSetup a3_setup() { return ExactSetup(type_a_graph(3), 4, ADEType{ADEFamily::A, 3, 4}); }

/// Random boundary-consistent diagram: start from a random identity layer and
/// stack random generators at random positions.
DiagramPtr random_diagram(std::mt19937& rng, int depth) {
    auto rand_color = [&] { return rng() % 2 == 0 ? Color::S : Color::T; };
    std::vector<Color> word;
    int w0 = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < w0; ++i) word.push_back(rand_color());
    DiagramPtr d = identity_diagram(word);
    for (int layer = 0; layer < depth; ++layer) {
        // choose a generator applicable to the current top word
        for (int attempt = 0; attempt < 8; ++attempt) {
            int choice = static_cast<int>(rng() % 5);
            if (choice == 0 && !word.empty()) {  // end a strand
                std::size_t p = rng() % word.size();
                std::vector<Color> left(word.begin(), word.begin() + p), right(word.begin() + p + 1, word.end());
                DiagramPtr layer_d = Diagram::hcomp(identity_diagram(left),
                                                    Diagram::hcomp(Diagram::gen(GenKind::EndDot, word[p]), identity_diagram(right)));
                d = Diagram::vcomp(layer_d, d);
                word.erase(word.begin() + p);
                break;
            }
            if (choice == 1 && word.size() < 6) {  // start a strand
                std::size_t p = rng() % (word.size() + 1);
                Color c = rand_color();
                std::vector<Color> left(word.begin(), word.begin() + p), right(word.begin() + p, word.end());
                DiagramPtr layer_d = Diagram::hcomp(identity_diagram(left),
                                                    Diagram::hcomp(Diagram::gen(GenKind::StartDot, c), identity_diagram(right)));
                d = Diagram::vcomp(layer_d, d);
                word.insert(word.begin() + p, c);
                break;
            }
            if (choice == 2 && !word.empty() && word.size() < 6) {  // split a strand
                std::size_t p = rng() % word.size();
                std::vector<Color> left(word.begin(), word.begin() + p), right(word.begin() + p + 1, word.end());
                DiagramPtr layer_d = Diagram::hcomp(identity_diagram(left),
                                                    Diagram::hcomp(Diagram::gen(GenKind::Split, word[p]), identity_diagram(right)));
                d = Diagram::vcomp(layer_d, d);
                word.insert(word.begin() + p, word[p]);
                break;
            }
            if (choice == 3 && word.size() >= 2) {  // merge two equal neighbors
                std::vector<std::size_t> spots;
                for (std::size_t p = 0; p + 1 < word.size(); ++p)
                    if (word[p] == word[p + 1]) spots.push_back(p);
                if (spots.empty()) continue;
                std::size_t p = spots[rng() % spots.size()];
                std::vector<Color> left(word.begin(), word.begin() + p), right(word.begin() + p + 2, word.end());
                DiagramPtr layer_d = Diagram::hcomp(identity_diagram(left),
                                                    Diagram::hcomp(Diagram::gen(GenKind::Merge, word[p]), identity_diagram(right)));
                d = Diagram::vcomp(layer_d, d);
                word.erase(word.begin() + p);
                break;
            }
            if (choice == 4) {  // identity layer; keep stacking
                break;
            }
        }
    }
    return d;
}

}  // namespace

TEST_CASE("barbell endomorphism matches the evaluated barbell diagram") {
    auto setup = a2_setup();
    auto& ctx = setup.ctx;
    const CyclotomicField* f = &setup.field;

    Morphism<Cyc> evaluated = evaluate(ctx, parse_expr("enddot(s) . startdot(s)", f, 3));
    Morphism<Cyc> closed = barbell_endo(ctx, Color::S);
    CHECK(morphism_equal(evaluated, closed));

    // frozen entries: e_1 -> 2 lambda_1 loop_1 = 2 loop_1,
    // e_2 -> -[2]_q lambda_2 loop_2 = loop_2, everything else -> 0
    const WordBimodule* reg = ctx.cache->get({});
    int e1 = reg->index_of({setup.alg.idempotent(1)});
    int e2 = reg->index_of({setup.alg.idempotent(2)});
    int l1 = reg->index_of({setup.alg.loop(1)});
    int l2 = reg->index_of({setup.alg.loop(2)});
    CHECK(evaluated.cols[e1] == std::map<int, Cyc>{{l1, Cyc(f, 2)}});
    CHECK(evaluated.cols[e2] == std::map<int, Cyc>{{l2, Cyc(f, 1)}});
    for (std::size_t j = 0; j < reg->dim(); ++j)
        if (static_cast<int>(j) != e1 && static_cast<int>(j) != e2) CHECK(evaluated.cols[j].empty());

    // any product of two or more barbells is zero
    Morphism<Cyc> bt = barbell_endo(ctx, Color::T);
    CHECK(compose(closed, closed).is_zero());
    CHECK(compose(closed, bt).is_zero());
    CHECK(compose(bt, bt).is_zero());
}

TEST_CASE("merge-split evaluates to zero, split-merge to the middle projection") {
    auto setup = a2_setup();
    Morphism<Cyc> ms = evaluate(setup.ctx, parse_expr("merge(s) . split(s)", &setup.field, 3));
    CHECK(ms.is_zero());
}

TEST_CASE("the Wenzl gadget reproduces the printed scalars on the 2-vertex path") {
    auto setup = a2_setup();
    auto& ctx = setup.ctx;
    const CyclotomicField* f = &setup.field;
    Cyc lambda1(f, 1), lambda2 = -quantum_integer_q(f, 2);

    // s-outer gadget: lambda_1^{-1} lambda_2 times the identity
    Morphism<Cyc> g_s = evaluate(ctx, *jw_gadget(3, Color::S));
    Morphism<Cyc> id_sts = identity_on_word(ctx, DihedralWord{Color::S, 3}.letters());
    CHECK(morphism_equal(g_s, scale(lambda1.inverse() * lambda2, id_sts)));

    // color-inverted gadget: lambda_1 lambda_2^{-1}
    Morphism<Cyc> g_t = evaluate(ctx, *jw_gadget(3, Color::T));
    Morphism<Cyc> id_tst = identity_on_word(ctx, DihedralWord{Color::T, 3}.letters());
    CHECK(morphism_equal(g_t, scale(lambda1 * lambda2.inverse(), id_tst)));
}

TEST_CASE("JW_3 vanishes on the 2-vertex path at n = 3") {
    auto setup = a2_setup();
    auto& ctx = setup.ctx;
    for (Color c : {Color::S, Color::T}) {
        const Morphism<Cyc>& jw = jw_morphism(ctx, 3, c);
        CHECK(jw.is_zero());
        // cross-check the memoized matrix recursion against the formal expansion
        Morphism<Cyc> expanded = evaluate(ctx, jw_expr(&setup.field, 3, c));
        CHECK(morphism_equal(jw, expanded));
    }
    CHECK_FALSE(jw_morphism(ctx, 2, Color::S).is_zero());
    CHECK_FALSE(jw_morphism(ctx, 1, Color::S).is_zero());
}

TEST_CASE("JW idempotency and annihilation by caps") {
    auto setup = a3_setup();
    auto& ctx = setup.ctx;
    for (Color lead : {Color::S, Color::T}) {
        for (int k = 1; k <= 3; ++k) {
            const Morphism<Cyc>& jw = jw_morphism(ctx, k, lead);
            CHECK(morphism_equal(compose(jw, jw), jw));
        }
        // the matrix route agrees with the formal expansion for small k
        for (int k = 2; k <= 4; ++k) {
            Morphism<Cyc> expanded = evaluate(ctx, jw_expr(&setup.field, k, lead));
            CHECK(morphism_equal(jw_morphism(ctx, k, lead), expanded));
        }
        // dotted merges on adjacent strands kill the projector
        for (int k = 3; k <= 4; ++k) {
            const Morphism<Cyc>& jw = jw_morphism(ctx, k, lead);
            std::vector<Color> letters = DihedralWord{lead, k}.letters();
            for (std::size_t p = 0; p + 2 < letters.size(); ++p) {
                Color c = letters[p], d = letters[p + 1];
                std::vector<Color> pre(letters.begin(), letters.begin() + p);
                std::vector<Color> post(letters.begin() + p + 3, letters.end());
                DiagramPtr kill = Diagram::hcomp(
                    identity_diagram(pre),
                    Diagram::hcomp(Diagram::hcomp(Diagram::gen(GenKind::Id, c),
                                                  Diagram::hcomp(Diagram::gen(GenKind::EndDot, d), Diagram::gen(GenKind::Id, c))),
                                   identity_diagram(post)));
                DiagramPtr merge_layer = Diagram::hcomp(identity_diagram(pre),
                                                        Diagram::hcomp(Diagram::gen(GenKind::Merge, c), identity_diagram(post)));
                Morphism<Cyc> killer = compose(evaluate(ctx, *merge_layer), evaluate(ctx, *kill));
                CHECK(compose(killer, jw).is_zero());
            }
        }
    }
}

TEST_CASE("JW_4 vanishes on the 3-vertex path at n = 4 and JW_3 does not") {
    auto setup = a3_setup();
    CHECK(jw_morphism(setup.ctx, 4, Color::S).is_zero());
    CHECK(jw_morphism(setup.ctx, 4, Color::T).is_zero());
    CHECK_FALSE(jw_morphism(setup.ctx, 3, Color::S).is_zero());
}

TEST_CASE("JW evaluation refuses k beyond n") {
    auto setup = a2_setup();
    CHECK_THROWS_WITH(jw_morphism(setup.ctx, 4, Color::S), Catch::Matchers::ContainsSubstring("undefined"));
}

TEST_CASE("relation suite passes on small type A cases") {
    {
        auto setup = a2_setup();
        SuiteReport r = relation_suite(setup.ctx);
        for (const auto& c : r.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.pass);
        }
    }
    {
        auto setup = a3_setup();
        SuiteReport r = relation_suite(setup.ctx, kAllRelations & ~static_cast<unsigned>(RelationGroup::JonesWenzl));
        for (const auto& c : r.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("running the suite with the wrong n fails the JW check") {
    // table weighting for A3 demands n = 4; with n = 3 the JW_3 image is
    // nonzero, as the Coxeter-number obstruction predicts
    BipartiteGraph g = type_a_graph(3);
    CyclotomicField f3(3);
    ZigzagAlgebra alg(g);
    BimoduleCache cache(&alg);
    // weights for n = 3 on the path: +[1], -[2], +[3] = (1, -1, 0) has a zero
    // weight, so use the valid n = 4 table transported to q at n = 3 is not
    // possible either; instead run with an ad hoc nonzero weighting
    std::map<int, Cyc> lambda{{1, Cyc(&f3, 1)}, {2, Cyc(&f3, -1)}, {3, Cyc(&f3, 1)}};
    auto ctx = make_context<Cyc>(&alg, &cache, ScalarField<Cyc>{&f3}, lambda, 3);
    CHECK_FALSE(jw_morphism(ctx, 3, Color::S).is_zero());
}

TEST_CASE("BF2 negative control: one sign flip breaks the relation") {
    BipartiteGraph g = type_a_graph(3);
    CyclotomicField f(4);
    ZigzagAlgebra alg(g);
    BimoduleCache cache(&alg);
    auto lambda = weighting_for_graph(g, ADEType{ADEFamily::A, 3, 4}, &f);
    REQUIRE(check_bf2(g, lambda, &f));
    lambda[2] = -lambda[2];
    CHECK_FALSE(check_bf2(g, lambda, &f));
    auto ctx = make_context<Cyc>(&alg, &cache, ScalarField<Cyc>{&f}, lambda, 4);
    SuiteReport r = relation_suite(ctx, static_cast<unsigned>(RelationGroup::Barbell));
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("all-ones weighting fails bf2 on the 3-vertex path at n = 4") {
    BipartiteGraph g = type_a_graph(3);
    CyclotomicField f(4);
    std::map<int, Cyc> ones{{1, Cyc(&f, 1)}, {2, Cyc(&f, 1)}, {3, Cyc(&f, 1)}};
    CHECK_FALSE(check_bf2(g, ones, &f));
}

TEST_CASE("scaled assignments keep the suite green") {
    for (auto [tau_num, ups_num] : {std::pair<int, int>{2, 1}, std::pair<int, int>{1, 2}}) {
        auto setup = a2_setup();
        setup.ctx.tau = Cyc(&setup.field, tau_num);
        setup.ctx.upsilon = Cyc(&setup.field, ups_num);
        SuiteReport r = relation_suite(setup.ctx);
        for (const auto& c : r.checks) {
            INFO(c.name << " with tau=" << tau_num << " upsilon=" << ups_num << ": " << c.detail);
            CHECK(c.pass);
        }
    }
    auto setup = a2_setup();
    setup.ctx.tau = Cyc::q_power(&setup.field, 1);
    setup.ctx.upsilon = Cyc::q_power(&setup.field, -1);
    CHECK(relation_suite(setup.ctx).all_pass());
}

TEST_CASE("coinvariant descent checks") {
    auto setup = a2_setup();
    SuiteReport r = coinvariant_checks(setup.ctx);
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    // z has the quadratic form (1, -[2]_q, 1)
    auto z = coinvariant_z(setup.ctx);
    CHECK(z.at({2, 0}) == Cyc(&setup.field, 1));
    CHECK(z.at({1, 1}) == -quantum_integer_q(&setup.field, 2));
    CHECK(z.at({0, 2}) == Cyc(&setup.field, 1));
    // Z is homogeneous of degree 2n
    for (const auto& [key, c] : coinvariant_Z(setup.ctx)) CHECK(key.first + key.second == 2 * 3);
}

TEST_CASE("perron-frobenius weightings") {
    // single edge
    PfWeighting w2 = weighting_pf(type_a_graph(2));
    CHECK(std::abs(w2.alpha - 1.0) < 1e-9);
    CHECK(std::abs(w2.lambda.at(1) - w2.lambda.at(2)) < 1e-9);
    CHECK(check_bf2_float(type_a_graph(2), w2.lambda, w2.q));

    // 3-vertex path
    PfWeighting w3 = weighting_pf(type_a_graph(3));
    CHECK(std::abs(w3.alpha - std::sqrt(2.0)) < 1e-9);
    CHECK(check_bf2_float(type_a_graph(3), w3.lambda, w3.q));

    // 4-leg spider with 9 vertices
    PfWeighting ws = weighting_pf(spider_graph(4, 2));
    CHECK(std::abs(ws.alpha - std::sqrt(5.0)) < 1e-9);
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    bool q_ok = std::abs(ws.q - std::complex<double>(-golden, 0.0)) < 1e-9 ||
                std::abs(ws.q - std::complex<double>(-(std::sqrt(5.0) + 1.0) / 2.0, 0.0)) < 1e-9 ||
                std::abs(ws.q - std::complex<double>(golden, 0.0)) < 1e-9 ||
                std::abs(ws.q - std::complex<double>((std::sqrt(5.0) + 1.0) / 2.0, 0.0)) < 1e-9;
    CHECK(q_ok);
    CHECK(check_bf2_float(spider_graph(4, 2), ws.lambda, ws.q));
}

TEST_CASE("hexagon admits the alternating weighting exactly at q = 1") {
    BipartiteGraph hexagon = cycle_graph(6);
    auto alternating = [&](double value) {
        std::map<int, std::complex<double>> w;
        for (const auto& v : hexagon.vertices()) w[v.id] = (v.id % 2 == 1 ? value : -value);
        return w;
    };
    const double pi = 3.14159265358979323846;
    int passes = 0;
    for (int k = -119; k <= 120; ++k) {
        std::complex<double> q = std::polar(1.0, pi * k / 120.0);
        if (check_bf2_float(hexagon, alternating(1.0), q)) {
            ++passes;
            CHECK(std::abs(q - std::complex<double>(1.0, 0.0)) < 1e-9);
        }
    }
    CHECK(passes == 1);
}

TEST_CASE("hexagon float-mode relations at q = 1") {
    BipartiteGraph hexagon = cycle_graph(6);
    ZigzagAlgebra alg(hexagon);
    BimoduleCache cache(&alg);
    std::map<int, std::complex<double>> lambda;
    for (const auto& v : hexagon.vertices()) lambda[v.id] = (v.id % 2 == 1 ? 1.0 : -1.0);
    auto ctx = make_context<std::complex<double>>(&alg, &cache, ScalarField<std::complex<double>>{{1.0, 0.0}},
                                                  lambda, kInfinity);
    SuiteReport r = relation_suite(ctx);
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("equivariance fuzzing on random diagrams") {
    auto setup = a2_setup();
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
        DiagramPtr d = random_diagram(rng, 1 + static_cast<int>(rng() % 5));
        Morphism<Cyc> m = evaluate(setup.ctx, *d);
        INFO(diagram_str(*d));
        CHECK(m.degree == diagram_degree(*d));
        CHECK(check_degree_homogeneous(m));
        CHECK(check_equivariance(m));
    }
}
