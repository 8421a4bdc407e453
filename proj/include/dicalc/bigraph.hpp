#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicalc/hecke.hpp"
#include "dicalc/numeric.hpp"
#include "dicalc/rational.hpp"
#include "json.hpp"

namespace dicalc {

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Two-colored connected simple graph. Canonical vertex order: all s-vertices
/// before all t-vertices, each class ascending by id; edges as (min,max) id
/// pairs, sorted lexicographically.
class BipartiteGraph {
  public:
    struct Vertex {
        int id;
        Color color;
    };

    BipartiteGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges) {
        for (auto& e : edges)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(edges.begin(), edges.end());
        std::stable_sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
            if (a.color != b.color) return a.color == Color::S;
            return a.id < b.id;
        });
        vertices_ = std::move(vertices);
        edges_ = std::move(edges);
        validate();
        for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i].id] = static_cast<int>(i);
        adj_.resize(vertices_.size());
        for (const auto& [a, b] : edges_) {
            adj_[index_.at(a)].push_back(b);
            adj_[index_.at(b)].push_back(a);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::size_t size() const { return vertices_.size(); }
    std::size_t s_count() const {
        std::size_t k = 0;
        for (const auto& v : vertices_) k += (v.color == Color::S);
        return k;
    }
    std::size_t t_count() const { return size() - s_count(); }

    bool has_vertex(int id) const { return index_.count(id) > 0; }
    Color color_of(int id) const { return vertices_[position_of(id)].color; }
    int position_of(int id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw GraphError("unknown vertex id " + std::to_string(id));
        return it->second;
    }
    const std::vector<int>& neighbors(int id) const { return adj_[position_of(id)]; }
    int degree(int id) const { return static_cast<int>(neighbors(id).size()); }
    bool adjacent(int a, int b) const {
        const auto& nb = neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    /// |S| x |T| block A of the full adjacency matrix [[0,A],[A^T,0]].
    std::vector<std::vector<int>> adjacency_block() const {
        std::size_t ns = s_count(), nt = t_count();
        std::vector<std::vector<int>> a(ns, std::vector<int>(nt, 0));
        for (const auto& [x, y] : edges_) {
            int px = position_of(x), py = position_of(y);
            if (px > py) std::swap(px, py);  // s-vertex first in canonical order
            a[px][py - static_cast<int>(ns)] = 1;
        }
        return a;
    }

    std::vector<std::vector<int>> full_adjacency() const {
        std::vector<std::vector<int>> a(size(), std::vector<int>(size(), 0));
        for (const auto& [x, y] : edges_) {
            int px = position_of(x), py = position_of(y);
            a[px][py] = a[py][px] = 1;
        }
        return a;
    }

  private:
    void validate() const {
        if (vertices_.empty()) throw GraphError("graph has no vertices");
        std::set<int> ids;
        for (const auto& v : vertices_)
            if (!ids.insert(v.id).second) throw GraphError("duplicate vertex id " + std::to_string(v.id));
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : edges_) {
            if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
            if (!ids.count(a) || !ids.count(b))
                throw GraphError("edge [" + std::to_string(a) + "," + std::to_string(b) + "] references unknown vertex");
            if (!seen.insert({a, b}).second)
                throw GraphError("duplicate edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
        }
        std::map<int, Color> color;
        for (const auto& v : vertices_) color[v.id] = v.color;
        for (const auto& [a, b] : edges_)
            if (color[a] == color[b])
                throw GraphError("monochrome edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
        // connectivity
        std::map<int, std::vector<int>> nb;
        for (const auto& [a, b] : edges_) {
            nb[a].push_back(b);
            nb[b].push_back(a);
        }
        std::set<int> seen_v{vertices_.front().id};
        std::vector<int> stack{vertices_.front().id};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nb[v])
                if (seen_v.insert(w).second) stack.push_back(w);
        }
        if (seen_v.size() != vertices_.size()) {
            for (const auto& v : vertices_)
                if (!seen_v.count(v.id)) throw GraphError("graph is disconnected (vertex " + std::to_string(v.id) + " unreachable)");
        }
    }

    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, int> index_;
    std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------- JSON I/O

inline BipartiteGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(std::string("graph JSON parse error: ") + e.what());
    }
    std::vector<BipartiteGraph::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw GraphError("graph JSON: missing 'vertices' array");
    for (const auto& v : j["vertices"]) {
        if (!v.contains("id") || !v.contains("color")) throw GraphError("graph JSON: vertex needs 'id' and 'color'");
        std::string c = v["color"].get<std::string>();
        if (c != "s" && c != "t") throw GraphError("graph JSON: color must be \"s\" or \"t\", got \"" + c + "\"");
        vs.push_back({v["id"].get<int>(), c == "s" ? Color::S : Color::T});
    }
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw GraphError("graph JSON: edge must be a pair of ids");
            es.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    return BipartiteGraph(std::move(vs), std::move(es));
}

inline std::string graph_to_json(const BipartiteGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices())
        j["vertices"].push_back({{"id", v.id}, {"color", v.color == Color::S ? "s" : "t"}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j.dump();
}

// ---------------------------------------------------------------- builders

/// Path with m vertices, ids 1..m left to right, alternating colors.
inline BipartiteGraph type_a_graph(int m, Color first = Color::S) {
    std::vector<BipartiteGraph::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= m; ++i) vs.push_back({i, (i % 2 == 1) ? first : opposite(first)});
    for (int i = 1; i < m; ++i) es.emplace_back(i, i + 1);
    return BipartiteGraph(std::move(vs), std::move(es));
}

/// Path 1..m-2 plus two leaves m-1, m on vertex m-2 (canonical enumeration:
/// path left to right, branch vertices last).
inline BipartiteGraph type_d_graph(int m, Color first = Color::S) {
    if (m < 4) throw GraphError("type_d_graph: rank must be >= 4");
    std::vector<BipartiteGraph::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= m - 2; ++i) vs.push_back({i, (i % 2 == 1) ? first : opposite(first)});
    Color branch = (m - 1) % 2 == 1 ? first : opposite(first);
    vs.push_back({m - 1, branch});
    vs.push_back({m, branch});
    for (int i = 1; i < m - 2; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(m - 2, m - 1);
    es.emplace_back(m - 2, m);
    return BipartiteGraph(std::move(vs), std::move(es));
}

/// E6/E7/E8: path of rank-1 vertices with the branch vertex (id = rank)
/// attached to the path; branch positions 3, 4, 5 from the left.
inline BipartiteGraph type_e_graph(int rank, Color first = Color::S) {
    if (rank < 6 || rank > 8) throw GraphError("type_e_graph: rank must be 6, 7 or 8");
    int fork = rank - 3;  // E6: path pos 3 of 5; E7: pos 4 of 6; E8: pos 5 of 7
    std::vector<BipartiteGraph::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= rank - 1; ++i) vs.push_back({i, (i % 2 == 1) ? first : opposite(first)});
    Color fork_color = (fork % 2 == 1) ? first : opposite(first);
    vs.push_back({rank, opposite(fork_color)});
    for (int i = 1; i < rank - 1; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(fork, rank);
    return BipartiteGraph(std::move(vs), std::move(es));
}

/// Even cycle with `len` vertices, ids 1..len around the circle.
inline BipartiteGraph cycle_graph(int len, Color first = Color::S) {
    if (len < 4 || len % 2 != 0) throw GraphError("cycle_graph: length must be even and >= 4");
    std::vector<BipartiteGraph::Vertex> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= len; ++i) vs.push_back({i, (i % 2 == 1) ? first : opposite(first)});
    for (int i = 1; i < len; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(len, 1);
    return BipartiteGraph(std::move(vs), std::move(es));
}

/// Spider: center id 0 plus `legs` paths of length `leg_len`.
inline BipartiteGraph spider_graph(int legs, int leg_len, Color center = Color::S) {
    std::vector<BipartiteGraph::Vertex> vs{{0, center}};
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int k = 1; k <= leg_len; ++k) {
            vs.push_back({next, (k % 2 == 1) ? opposite(center) : center});
            es.emplace_back(prev, next);
            prev = next++;
        }
    }
    return BipartiteGraph(std::move(vs), std::move(es));
}

inline BipartiteGraph opposite_coloring(const BipartiteGraph& g) {
    std::vector<BipartiteGraph::Vertex> vs;
    for (const auto& v : g.vertices()) vs.push_back({v.id, opposite(v.color)});
    return BipartiteGraph(std::move(vs), g.edges());
}

// ------------------------------------------------------- exact char poly

/// Characteristic polynomial det(xI - M) of an integer matrix, via the
/// division-free Samuelson-Berkowitz scheme. Returned ascending in x.
inline IntPoly char_poly_int(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    // coefficients in descending powers, leading 1
    std::vector<BigInt> poly{BigInt(1), BigInt(-m[0][0])};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column t[0..r+1]
        std::vector<BigInt> t(r + 2, BigInt(0));
        t[0] = 1;
        t[1] = -m[r][r];
        std::vector<BigInt> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = m[i][r];
        for (std::size_t k = 2; k <= r + 1; ++k) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += m[r][i] * s[i];
            t[k] = -dot;
            if (k <= r) {
                std::vector<BigInt> s2(r, BigInt(0));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) s2[i] += m[i][j] * s[j];
                s = std::move(s2);
            }
        }
        std::vector<BigInt> next(r + 2, BigInt(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j < poly.size() && j <= i; ++j) next[i] += t[i - j] * poly[j];
        poly = std::move(next);
    }
    std::reverse(poly.begin(), poly.end());
    poly_trim(poly);
    return poly;
}

inline IntPoly char_poly(const BipartiteGraph& g) { return char_poly_int(g.full_adjacency()); }

/// Adjacency eigenvalues, ascending.
inline std::vector<double> spectrum_float(const BipartiteGraph& g) {
    auto a = g.full_adjacency();
    DMatrix d = dmat(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = a[i][j];
    auto es = jacobi_eigen(std::move(d));
    return es.values;
}

// ------------------------------------------------------- ADE recognition

enum class ADEFamily : unsigned char { A, D, E };

struct ADEType {
    ADEFamily family;
    int rank;
    int coxeter;

    std::string str() const {
        std::string f = family == ADEFamily::A ? "A" : family == ADEFamily::D ? "D" : "E";
        return f + std::to_string(rank);
    }
};

inline int coxeter_number(ADEFamily f, int rank) {
    switch (f) {
        case ADEFamily::A: return rank + 1;
        case ADEFamily::D: return 2 * rank - 2;
        case ADEFamily::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    }
    return 0;
}

/// Structural recognition of simply laced Dynkin graphs, cross-checked
/// against Smith's spectral criterion (largest adjacency eigenvalue < 2).
inline std::optional<ADEType> recognize_ade(const BipartiteGraph& g) {
    auto spectral_ok = [&] {
        auto sp = spectrum_float(g);
        return sp.back() < 2.0 - 1e-9;
    };
    std::optional<ADEType> result;
    const int n = static_cast<int>(g.size());
    if (n == 1) {
        result = ADEType{ADEFamily::A, 1, 2};
    } else if (static_cast<int>(g.edges().size()) == n - 1) {  // tree
        std::vector<int> deg3;
        bool small_degrees = true;
        for (const auto& v : g.vertices()) {
            int d = g.degree(v.id);
            if (d > 3) small_degrees = false;
            if (d == 3) deg3.push_back(v.id);
        }
        if (small_degrees && deg3.empty()) {
            result = ADEType{ADEFamily::A, n, coxeter_number(ADEFamily::A, n)};
        } else if (small_degrees && deg3.size() == 1) {
            // branch lengths from the fork
            std::vector<int> lens;
            for (int nb : g.neighbors(deg3[0])) {
                int len = 1, prev = deg3[0], cur = nb;
                while (g.degree(cur) == 2) {
                    for (int w : g.neighbors(cur))
                        if (w != prev) {
                            prev = cur;
                            cur = w;
                            break;
                        }
                    ++len;
                }
                lens.push_back(len);
            }
            std::sort(lens.begin(), lens.end());
            if (lens[0] == 1 && lens[1] == 1)
                result = ADEType{ADEFamily::D, n, coxeter_number(ADEFamily::D, n)};
            else if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
                result = ADEType{ADEFamily::E, n, coxeter_number(ADEFamily::E, n)};
        }
    }
    bool spectral = spectral_ok();
    if (result.has_value() != spectral)
        throw std::logic_error("recognize_ade: structural and spectral criteria disagree");
    return result;
}

// ------------------------------------------------------- isomorphism

namespace detail {
inline bool iso_backtrack(const BipartiteGraph& g1, const BipartiteGraph& g2, std::vector<int>& order, std::size_t pos,
                          std::map<int, int>& fwd, std::set<int>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (const auto& w : g2.vertices()) {
        if (used.count(w.id)) continue;
        if (w.color != g1.color_of(v)) continue;
        if (g2.degree(w.id) != g1.degree(v)) continue;
        bool ok = true;
        for (int nb : g1.neighbors(v)) {
            auto it = fwd.find(nb);
            if (it != fwd.end() && !g2.adjacent(w.id, it->second)) {
                ok = false;
                break;
            }
        }
        // mapped g2-neighbors of w must pull back to neighbors of v
        if (ok)
            for (const auto& [a, b] : fwd)
                if (g2.adjacent(w.id, b) != g1.adjacent(v, a)) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        fwd[v] = w.id;
        used.insert(w.id);
        if (iso_backtrack(g1, g2, order, pos + 1, fwd, used)) return true;
        fwd.erase(v);
        used.erase(w.id);
    }
    return false;
}
}  // namespace detail

/// Color-preserving graph isomorphism via backtracking (fine for the graph
/// sizes this library targets, <= ~20 vertices).
inline std::optional<std::map<int, int>> is_isomorphic_bipartite(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    if (g1.size() != g2.size() || g1.s_count() != g2.s_count() || g1.edges().size() != g2.edges().size()) return std::nullopt;
    // BFS order keeps mapped neighbors available for pruning
    std::vector<int> order;
    std::set<int> seen;
    std::vector<int> queue{g1.vertices().front().id};
    seen.insert(queue[0]);
    while (!queue.empty()) {
        int v = queue.front();
        queue.erase(queue.begin());
        order.push_back(v);
        for (int w : g1.neighbors(v))
            if (seen.insert(w).second) queue.push_back(w);
    }
    std::map<int, int> fwd;
    std::set<int> used;
    if (detail::iso_backtrack(g1, g2, order, 0, fwd, used)) return fwd;
    return std::nullopt;
}

/// Equal color class sizes and exactly equal characteristic polynomials.
inline bool spectrum_color_equivalent(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    return g1.s_count() == g2.s_count() && g1.t_count() == g2.t_count() && char_poly(g1) == char_poly(g2);
}

}  // namespace dicalc
