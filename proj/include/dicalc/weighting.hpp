#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicalc/bigraph.hpp"
#include "dicalc/cyclotomic.hpp"
#include "dicalc/numeric.hpp"

namespace dicalc {

/// Weights for the ADE graph with canonical vertex enumeration (path vertices
/// left to right, branch vertices last), indexed by position. The values do
/// not depend on the two-coloring.
inline std::vector<Cyc> ade_weights(const ADEType& type, const CyclotomicField* field) {
    if (static_cast<int>(field->n()) != type.coxeter)
        throw std::invalid_argument("ade_weights: field has n = " + std::to_string(field->n()) + " but " + type.str() +
                                    " has Coxeter number " + std::to_string(type.coxeter));
    auto qi = [&](int k) { return quantum_integer_q(field, k); };
    auto sgn = [&](int k, const Cyc& x) { return k % 2 == 1 ? x : -x; };
    std::vector<Cyc> w;
    const Cyc half(field, make_rational(1, 2));
    switch (type.family) {
        case ADEFamily::A:
            for (int k = 1; k <= type.rank; ++k) w.push_back(sgn(k, qi(k)));
            break;
        case ADEFamily::D: {
            int m = type.rank;
            for (int k = 1; k <= m - 2; ++k) w.push_back(sgn(k, qi(k)));
            Cyc branch = sgn(m - 1, qi(m - 1) * half);
            w.push_back(branch);
            w.push_back(branch);
            break;
        }
        case ADEFamily::E: {
            if (type.rank == 6) {
                w = {qi(1), -qi(2), qi(3), -qi(2), qi(1), -(qi(3) * qi(2).inverse())};
            } else if (type.rank == 7) {
                w = {qi(1), -qi(2), qi(3), -qi(4), qi(6) * qi(2).inverse(), -(qi(4) * qi(3).inverse()),
                     qi(4) * qi(2).inverse()};
            } else {
                w = {qi(1), -qi(2), qi(3), -qi(4), qi(5), -(qi(7) * qi(2).inverse()), qi(5) * qi(3).inverse(),
                     -(qi(5) * qi(2).inverse())};
            }
            break;
        }
    }
    return w;
}

/// Table weighting attached to a graph built by the canonical ADE builders
/// (vertex ids 1..rank in enumeration order).
inline std::map<int, Cyc> weighting_table_ade(const ADEType& type, const CyclotomicField* field) {
    std::vector<Cyc> w = ade_weights(type, field);
    std::map<int, Cyc> out;
    for (int k = 0; k < type.rank; ++k) out[k + 1] = w[k];
    return out;
}

/// Transport the canonical table weighting onto an isomorphic copy of the ADE
/// graph (weights are coloring-independent, so both colorings are tried).
inline std::map<int, Cyc> weighting_for_graph(const BipartiteGraph& g, const ADEType& type, const CyclotomicField* field) {
    std::vector<Cyc> w = ade_weights(type, field);
    for (Color c : {Color::S, Color::T}) {
        BipartiteGraph canonical = type.family == ADEFamily::A   ? type_a_graph(type.rank, c)
                                   : type.family == ADEFamily::D ? type_d_graph(type.rank, c)
                                                                 : type_e_graph(type.rank, c);
        if (auto iso = is_isomorphic_bipartite(canonical, g)) {
            std::map<int, Cyc> out;
            for (int k = 1; k <= type.rank; ++k) out[iso->at(k)] = w[k - 1];
            return out;
        }
    }
    throw std::invalid_argument("weighting_for_graph: graph is not of type " + type.str());
}

struct Bf2Failure {
    int vertex = 0;
    std::string reason;
};

/// Exact check of -[2]_q lambda_i = sum over neighbors lambda_j at every
/// vertex, plus invertibility of all weights.
inline std::optional<Bf2Failure> check_bf2_exact(const BipartiteGraph& g, const std::map<int, Cyc>& lambda,
                                                 const CyclotomicField* field) {
    Cyc minus_two = -quantum_integer_q(field, 2);
    for (const auto& v : g.vertices()) {
        auto it = lambda.find(v.id);
        if (it == lambda.end()) return Bf2Failure{v.id, "missing weight"};
        if (it->second.is_zero()) return Bf2Failure{v.id, "zero weight"};
    }
    for (const auto& v : g.vertices()) {
        Cyc rhs(field);
        for (int nb : g.neighbors(v.id)) rhs += lambda.at(nb);
        if (minus_two * lambda.at(v.id) != rhs) return Bf2Failure{v.id, "-[2]_q lambda != neighbor sum"};
    }
    return std::nullopt;
}

inline bool check_bf2(const BipartiteGraph& g, const std::map<int, Cyc>& lambda, const CyclotomicField* field) {
    return !check_bf2_exact(g, lambda, field).has_value();
}

/// Float-mode check at the given q, default tolerance 1e-9.
inline bool check_bf2_float(const BipartiteGraph& g, const std::map<int, std::complex<double>>& lambda,
                            std::complex<double> q, double tol = 1e-9) {
    std::complex<double> minus_two = -(q + 1.0 / q);
    for (const auto& v : g.vertices()) {
        auto it = lambda.find(v.id);
        if (it == lambda.end() || std::abs(it->second) < tol) return false;
    }
    for (const auto& v : g.vertices()) {
        std::complex<double> rhs(0.0, 0.0);
        for (int nb : g.neighbors(v.id)) rhs += lambda.at(nb);
        if (std::abs(minus_two * lambda.at(v.id) - rhs) > tol) return false;
    }
    return true;
}

struct PfWeighting {
    double alpha = 0.0;                         // Perron-Frobenius eigenvalue of A(G)
    std::complex<double> q;                     // solves -[2]_q = alpha (PF branch)
    std::map<int, std::complex<double>> lambda;  // strictly positive eigenvector entries
};

/// Power-iteration Perron-Frobenius weighting; q is the branch determined by
/// the PF eigenvalue, not normalized to the ADE sign convention.
inline PfWeighting weighting_pf(const BipartiteGraph& g, double tol = 1e-12) {
    auto a = g.full_adjacency();
    DMatrix d = dmat(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = a[i][j];
    // shift to make the PF eigenvalue dominant in absolute value (the
    // adjacency spectrum is symmetric for bipartite graphs)
    double shift = static_cast<double>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i][i] += shift;
    PowerIterationResult pr = power_iteration(d, tol);
    PfWeighting out;
    out.alpha = pr.eigenvalue - shift;
    std::complex<double> disc = std::sqrt(std::complex<double>(out.alpha * out.alpha - 4.0, 0.0));
    out.q = (-out.alpha + disc) / 2.0;
    for (std::size_t i = 0; i < g.size(); ++i) out.lambda[g.vertices()[i].id] = pr.eigenvector[i];
    return out;
}

}  // namespace dicalc
