#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicalc/bigraph.hpp"
#include "dicalc/bimodule.hpp"
#include "dicalc/numeric.hpp"

namespace dicalc {

/// All ADE bipartite graphs with the given Coxeter number, both colorings,
/// before isomorphism dedup. Type D only exists for even n >= 6 (below that
/// the D graphs coincide with type A ones).
inline std::vector<BipartiteGraph> graphs_for_coxeter(int n) {
    if (n < 2) throw std::invalid_argument("graphs_for_coxeter: n must be >= 2");
    std::vector<BipartiteGraph> out;
    for (Color c : {Color::S, Color::T}) out.push_back(type_a_graph(n - 1, c));
    if (n % 2 == 0 && n >= 6)
        for (Color c : {Color::S, Color::T}) out.push_back(type_d_graph(n / 2 + 1, c));
    if (n == 12 || n == 18 || n == 30) {
        int rank = n == 12 ? 6 : n == 18 ? 7 : 8;
        for (Color c : {Color::S, Color::T}) out.push_back(type_e_graph(rank, c));
    }
    return out;
}

struct ClassEntry {
    BipartiteGraph graph;
    ADEType ade;
    std::string coloring;  // "s-first" or "t-first" along the canonical enumeration
    int decat_class = -1;  // index of the spectrum-color-equivalence cell
};

struct ClassificationReport {
    int n = 0;
    std::vector<ClassEntry> classes;
    int decat_class_count = 0;
    // The one-vertex cell 2-representation has Grothendieck rank 1 and exists
    // for every n; the classification proper lists only rank > 1.
    std::string rank_one_note = "rank 1: the one-vertex bipartite graph carries the trivial cell 2-representation for every n";
};

/// Equivalence classes = isomorphism classes of the ADE bipartite graphs with
/// Coxeter number n; the decategorification partition refines by
/// spectrum-color-equivalence.
inline ClassificationReport equivalence_classes(int n) {
    ClassificationReport report;
    report.n = n;
    for (auto& g : graphs_for_coxeter(n)) {
        bool duplicate = false;
        for (const auto& entry : report.classes)
            if (is_isomorphic_bipartite(entry.graph, g)) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        auto ade = recognize_ade(g);
        if (!ade) throw std::logic_error("equivalence_classes: generated graph not recognized as ADE");
        std::string coloring = g.vertices().empty() ? "" : (g.color_of(1) == Color::S ? "s-first" : "t-first");
        report.classes.push_back({std::move(g), *ade, coloring, -1});
    }
    // decategorification cells
    int next = 0;
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        if (report.classes[i].decat_class >= 0) continue;
        report.classes[i].decat_class = next;
        for (std::size_t j = i + 1; j < report.classes.size(); ++j)
            if (report.classes[j].decat_class < 0 &&
                spectrum_color_equivalent(report.classes[i].graph, report.classes[j].graph))
                report.classes[j].decat_class = next;
        ++next;
    }
    report.decat_class_count = next;
    return report;
}

struct SvdWitness {
    DMatrix uw;  // U W^T, conjugates the S-blocks
    DMatrix vx;  // V X^T, conjugates the T-blocks
    double residual = 0.0;
    bool degenerate = false;  // repeated singular values: conjugator not unique
};

namespace classify_detail {

/// Normalize so each left singular vector's first nonzero entry is positive.
/// The matching right singular vector flips along, keeping A = U Sigma V^T.
inline void fix_svd_signs(Svd& s) {
    for (std::size_t j = 0; j < s.u[0].size(); ++j) {
        std::size_t first = 0;
        while (first < s.u.size() && std::abs(s.u[first][j]) < 1e-9) ++first;
        if (first < s.u.size() && s.u[first][j] < 0) {
            for (std::size_t i = 0; i < s.u.size(); ++i) s.u[i][j] = -s.u[i][j];
            if (j < s.v[0].size())
                for (std::size_t i = 0; i < s.v.size(); ++i) s.v[i][j] = -s.v[i][j];
        }
    }
}

inline DMatrix int_to_dmat(const std::vector<std::vector<int>>& a) {
    DMatrix out = dmat(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j];
    return out;
}

inline double max_abs_diff(const DMatrix& a, const DMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

}  // namespace classify_detail

/// Change-of-basis witness between the theta matrices of two
/// spectrum-color-equivalent graphs, built from singular value decompositions
/// A = U Sigma V^T and A' = W Sigma X^T of the adjacency blocks. The residual
/// bounds the unitarity defect and the defect of U W^T A' V X^T... precisely:
/// max of |(UW^T)(UW^T)^T - I|, |(VX^T)(VX^T)^T - I|, |W U^T A V X^T - A'| and
/// the transposed identity for the other theta matrix.
inline SvdWitness svd_change_of_basis(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    using namespace classify_detail;
    if (!spectrum_color_equivalent(g1, g2))
        throw std::invalid_argument("svd_change_of_basis: graphs are not spectrum-color-equivalent");
    DMatrix a = int_to_dmat(g1.adjacency_block());
    DMatrix ap = int_to_dmat(g2.adjacency_block());
    Svd s1 = svd_small(a);
    Svd s2 = svd_small(ap);
    fix_svd_signs(s1);
    fix_svd_signs(s2);

    SvdWitness out;
    out.degenerate = s1.degenerate || s2.degenerate;
    out.uw = dmat_mul(s1.u, dmat_transpose(s2.u));  // U W^T
    out.vx = dmat_mul(s1.v, dmat_transpose(s2.v));  // V X^T

    DMatrix wu = dmat_transpose(out.uw), xv = dmat_transpose(out.vx);
    DMatrix eye_s = dmat(out.uw.size(), out.uw.size());
    for (std::size_t i = 0; i < eye_s.size(); ++i) eye_s[i][i] = 1.0;
    DMatrix eye_t = dmat(out.vx.size(), out.vx.size());
    for (std::size_t i = 0; i < eye_t.size(); ++i) eye_t[i][i] = 1.0;

    double r = 0.0;
    r = std::max(r, max_abs_diff(dmat_mul(out.uw, wu), eye_s));
    r = std::max(r, max_abs_diff(dmat_mul(out.vx, xv), eye_t));
    // theta_s block: W U^T A V X^T = A'
    r = std::max(r, max_abs_diff(dmat_mul(wu, dmat_mul(a, out.vx)), ap));
    // theta_t block: X V^T A^T U W^T = A'^T
    r = std::max(r, max_abs_diff(dmat_mul(xv, dmat_mul(dmat_transpose(a), out.uw)), dmat_transpose(ap)));
    out.residual = r;
    return out;
}

}  // namespace dicalc
