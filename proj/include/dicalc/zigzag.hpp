#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicalc/bigraph.hpp"

namespace dicalc {

enum class PathKind : unsigned char { Idempotent, Arrow, Loop };

/// Basis path of the quiver algebra: e_i, an arrow target|source, or loop_i.
struct PathElement {
    PathKind kind;
    int source;  // start vertex
    int target;  // end vertex (== source except for arrows)

    int degree() const { return kind == PathKind::Idempotent ? 0 : kind == PathKind::Arrow ? 1 : 2; }

    std::string str() const {
        switch (kind) {
            case PathKind::Idempotent: return "e_" + std::to_string(source);
            case PathKind::Arrow: return std::to_string(target) + "|" + std::to_string(source);
            case PathKind::Loop: return "loop_" + std::to_string(source);
        }
        return "?";
    }

    friend bool operator==(const PathElement& a, const PathElement& b) {
        return a.kind == b.kind && a.source == b.source && a.target == b.target;
    }
};

/// Quiver algebra of a bipartite graph: the double quiver modulo the two-step,
/// three-step and partner relations. Basis {e_i} + {arrows} + {loop_i}; the
/// whole multiplication table is materialized at build time.
class ZigzagAlgebra {
  public:
    explicit ZigzagAlgebra(BipartiteGraph graph) : graph_(std::move(graph)) {
        for (const auto& v : graph_.vertices()) {
            idem_index_[v.id] = static_cast<int>(basis_.size());
            basis_.push_back({PathKind::Idempotent, v.id, v.id});
        }
        for (const auto& v : graph_.vertices())
            for (int nb : graph_.neighbors(v.id)) {
                arrow_index_[{nb, v.id}] = static_cast<int>(basis_.size());
                basis_.push_back({PathKind::Arrow, v.id, nb});  // nb|v
            }
        for (const auto& v : graph_.vertices()) {
            loop_index_[v.id] = static_cast<int>(basis_.size());
            basis_.push_back({PathKind::Loop, v.id, v.id});
        }
        build_table();
    }

    const BipartiteGraph& graph() const { return graph_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<PathElement>& basis() const { return basis_; }
    const PathElement& element(int idx) const { return basis_.at(idx); }

    int idempotent(int vertex) const { return idem_index_.at(vertex); }
    int loop(int vertex) const { return loop_index_.at(vertex); }
    int arrow(int target, int source) const {
        auto it = arrow_index_.find({target, source});
        if (it == arrow_index_.end())
            throw std::invalid_argument("ZigzagAlgebra: no arrow " + std::to_string(target) + "|" + std::to_string(source));
        return it->second;
    }

    /// Product of basis elements; -1 encodes zero. All structure constants of
    /// the algebra are 0 or 1, so an index is the whole answer.
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * dim() + b]; }

    int degree(int idx) const { return basis_[idx].degree(); }

    /// Basis of the left projective P_i: paths with source i, ordered
    /// e_i, arrows j|i (j in neighbor order), loop_i.
    std::vector<int> projective_left_basis(int vertex) const {
        std::vector<int> out{idempotent(vertex)};
        for (int nb : graph_.neighbors(vertex)) out.push_back(arrow(nb, vertex));
        out.push_back(loop(vertex));
        return out;
    }

    /// Basis of the right projective _iP: paths with target i.
    std::vector<int> projective_right_basis(int vertex) const {
        std::vector<int> out{idempotent(vertex)};
        for (int nb : graph_.neighbors(vertex)) out.push_back(arrow(vertex, nb));
        out.push_back(loop(vertex));
        return out;
    }

  private:
    void build_table() {
        const std::size_t d = dim();
        table_.assign(d * d, -1);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const PathElement& pa = basis_[a];
                const PathElement& pb = basis_[b];
                if (pa.source != pb.target) continue;  // composition a after b
                int idx = -1;
                if (pa.kind == PathKind::Idempotent)
                    idx = static_cast<int>(b);
                else if (pb.kind == PathKind::Idempotent)
                    idx = static_cast<int>(a);
                else if (pa.kind == PathKind::Arrow && pb.kind == PathKind::Arrow) {
                    // partners (same edge, opposite directions) compose to the loop
                    if (pa.target == pb.source) idx = loop_index_.at(pa.target);
                }
                // any composite involving a loop and a positive-length path is zero
                table_[a * d + b] = idx;
            }
    }

    BipartiteGraph graph_;
    std::vector<PathElement> basis_;
    std::map<int, int> idem_index_;
    std::map<std::pair<int, int>, int> arrow_index_;
    std::map<int, int> loop_index_;
    std::vector<int> table_;
};

}  // namespace dicalc
