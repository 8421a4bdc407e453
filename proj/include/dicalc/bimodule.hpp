#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dicalc/cyclotomic.hpp"
#include "dicalc/laurent.hpp"
#include "dicalc/zigzag.hpp"

namespace dicalc {

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Cyc> {
    static bool negligible(const Cyc& x) { return x.is_zero(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static bool negligible(const std::complex<double>& x) { return std::abs(x) < 1e-13; }
};

/// Graded bimodule attached to a word in s,t: the tensor product over the
/// quiver algebra of one P_i{-1} (x) _iP per letter, with the regular
/// bimodule for the empty word. Letters are stored leftmost first.
///
/// A basis element of a length-l word is a factor tuple
///   (head in P_{i_{l}}, middles in _{i}P_{j}, tail in _{i_1}P)
/// encoded by quiver-algebra basis indices; the vertex sequence of the
/// summand is recoverable from the factors. Degree = sum of path lengths - l.
class WordBimodule {
  public:
    struct TensorElt {
        std::vector<int> verts;    // summand vertices, leftmost letter first
        std::vector<int> factors;  // l+1 algebra basis indices (1 for the empty word)
        int degree = 0;
    };

    WordBimodule(const ZigzagAlgebra* alg, std::vector<Color> word) : alg_(alg), word_(std::move(word)) {
        if (word_.empty()) {
            for (std::size_t i = 0; i < alg_->dim(); ++i) {
                TensorElt e;
                e.factors = {static_cast<int>(i)};
                e.degree = alg_->degree(static_cast<int>(i));
                push(std::move(e));
            }
            return;
        }
        std::vector<int> verts;
        enumerate_summands(verts);
    }

    const ZigzagAlgebra* algebra() const { return alg_; }
    const std::vector<Color>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<TensorElt>& basis() const { return basis_; }
    const TensorElt& element(int idx) const { return basis_.at(idx); }

    int index_of(const std::vector<int>& factors) const {
        auto it = index_.find(factors);
        if (it == index_.end()) throw std::logic_error("WordBimodule: unknown basis element");
        return it->second;
    }

    /// Post-compose the algebra element a into the head factor; basis goes to
    /// basis or zero since all structure constants are 0/1.
    int left_act(int a, int elt) const {
        const TensorElt& e = basis_[elt];
        int h = alg_->multiply(a, e.factors.front());
        if (h < 0) return -1;
        if (h == e.factors.front()) return elt;  // idempotent acted as unit
        std::vector<int> f = e.factors;
        f.front() = h;
        return index_.at(f);
    }

    /// Pre-compose into the tail factor.
    int right_act(int elt, int a) const {
        const TensorElt& e = basis_[elt];
        int t = alg_->multiply(e.factors.back(), a);
        if (t < 0) return -1;
        if (t == e.factors.back()) return elt;
        std::vector<int> f = e.factors;
        f.back() = t;
        return index_.at(f);
    }

    std::string element_str(int idx) const {
        const TensorElt& e = basis_[idx];
        std::ostringstream os;
        for (std::size_t i = 0; i < e.factors.size(); ++i) {
            if (i) os << " (x) ";
            os << alg_->element(e.factors[i]).str();
        }
        return os.str();
    }

  private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    void push(TensorElt e) {
        index_.emplace(e.factors, static_cast<int>(basis_.size()));
        basis_.push_back(std::move(e));
    }

    void enumerate_summands(std::vector<int>& verts) {
        const std::size_t l = word_.size();
        if (verts.size() == l) {
            emit_summand(verts);
            return;
        }
        std::size_t pos = verts.size();
        for (const auto& v : alg_->graph().vertices()) {
            if (v.color != word_[pos]) continue;
            if (pos > 0) {
                int prev = verts[pos - 1];
                bool ok = (prev == v.id) || alg_->graph().adjacent(prev, v.id);
                if (!ok) continue;  // middle factor would vanish
            }
            verts.push_back(v.id);
            enumerate_summands(verts);
            verts.pop_back();
        }
    }

    void emit_summand(const std::vector<int>& verts) {
        const std::size_t l = verts.size();
        std::vector<std::vector<int>> slots;
        slots.push_back(alg_->projective_left_basis(verts.front()));
        for (std::size_t i = 1; i < l; ++i) {
            if (verts[i - 1] == verts[i])
                slots.push_back({alg_->idempotent(verts[i]), alg_->loop(verts[i])});
            else
                slots.push_back({alg_->arrow(verts[i - 1], verts[i])});
        }
        slots.push_back(alg_->projective_right_basis(verts.back()));

        std::vector<std::size_t> pick(slots.size(), 0);
        while (true) {
            TensorElt e;
            e.verts = verts;
            e.factors.reserve(slots.size());
            int deg = -static_cast<int>(l);
            for (std::size_t i = 0; i < slots.size(); ++i) {
                int f = slots[i][pick[i]];
                e.factors.push_back(f);
                deg += alg_->degree(f);
            }
            e.degree = deg;
            push(std::move(e));
            std::size_t i = slots.size();
            while (i > 0) {
                --i;
                if (++pick[i] < slots[i].size()) break;
                pick[i] = 0;
                if (i == 0) return;
            }
        }
    }

    const ZigzagAlgebra* alg_;
    std::vector<Color> word_;
    std::vector<TensorElt> basis_;
    std::unordered_map<std::vector<int>, int, VecHash> index_;
};

/// Owns the word bimodules of one algebra so morphisms can hold stable
/// pointers.
class BimoduleCache {
  public:
    explicit BimoduleCache(const ZigzagAlgebra* alg) : alg_(alg) {}

    const ZigzagAlgebra* algebra() const { return alg_; }

    const WordBimodule* get(const std::vector<Color>& word) {
        auto it = store_.find(word);
        if (it != store_.end()) return it->second.get();
        auto wb = std::make_unique<WordBimodule>(alg_, word);
        const WordBimodule* ptr = wb.get();
        store_.emplace(word, std::move(wb));
        return ptr;
    }

  private:
    const ZigzagAlgebra* alg_;
    std::map<std::vector<Color>, std::unique_ptr<WordBimodule>> store_;
};

/// Degree-homogeneous sparse linear map between word bimodules, stored
/// column-wise: cols[src index] = {dst index -> coefficient}.
template <class K>
struct Morphism {
    const WordBimodule* src = nullptr;
    const WordBimodule* dst = nullptr;
    int degree = 0;
    std::vector<std::map<int, K>> cols;

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : cols) n += c.size();
        return n;
    }
    bool is_zero() const {
        for (const auto& c : cols)
            if (!c.empty()) return false;
        return true;
    }
    void set(int dst_idx, int src_idx, K value) {
        if (ScalarTraits<K>::negligible(value)) return;
        cols[src_idx][dst_idx] = std::move(value);
    }
    void accumulate(int dst_idx, int src_idx, const K& value) {
        auto& cell = cols[src_idx];
        auto it = cell.find(dst_idx);
        if (it == cell.end()) {
            if (!ScalarTraits<K>::negligible(value)) cell.emplace(dst_idx, value);
        } else {
            it->second = it->second + value;
            if (ScalarTraits<K>::negligible(it->second)) cell.erase(it);
        }
    }
};

template <class K>
Morphism<K> zero_morphism(const WordBimodule* src, const WordBimodule* dst, int degree) {
    Morphism<K> m;
    m.src = src;
    m.dst = dst;
    m.degree = degree;
    m.cols.resize(src->dim());
    return m;
}

template <class K>
Morphism<K> identity_morphism(const WordBimodule* wb, const K& one) {
    Morphism<K> m = zero_morphism<K>(wb, wb, 0);
    for (std::size_t i = 0; i < wb->dim(); ++i) m.cols[i].emplace(static_cast<int>(i), one);
    return m;
}

template <class K>
Morphism<K> add(const Morphism<K>& f, const Morphism<K>& g) {
    if (f.src != g.src || f.dst != g.dst) throw std::invalid_argument("Morphism add: boundary mismatch");
    if (f.degree != g.degree) throw std::invalid_argument("Morphism add: degree mismatch");
    Morphism<K> out = f;
    for (std::size_t j = 0; j < g.cols.size(); ++j)
        for (const auto& [i, v] : g.cols[j]) out.accumulate(i, static_cast<int>(j), v);
    return out;
}

template <class K>
Morphism<K> scale(const K& c, const Morphism<K>& f) {
    Morphism<K> out = zero_morphism<K>(f.src, f.dst, f.degree);
    if (ScalarTraits<K>::negligible(c)) return out;
    for (std::size_t j = 0; j < f.cols.size(); ++j)
        for (const auto& [i, v] : f.cols[j]) out.set(i, static_cast<int>(j), c * v);
    return out;
}

/// f after g.
template <class K>
Morphism<K> compose(const Morphism<K>& f, const Morphism<K>& g) {
    if (f.src != g.dst)
        throw std::invalid_argument("Morphism compose: boundary mismatch (" + word_str(f.src->word()) + " vs " +
                                    word_str(g.dst->word()) + ")");
    Morphism<K> out = zero_morphism<K>(g.src, f.dst, f.degree + g.degree);
    for (std::size_t j = 0; j < g.cols.size(); ++j)
        for (const auto& [k, a] : g.cols[j])
            for (const auto& [i, b] : f.cols[k]) out.accumulate(i, static_cast<int>(j), b * a);
    return out;
}

template <class K>
bool morphism_equal(const Morphism<K>& f, const Morphism<K>& g) {
    if (f.src != g.src || f.dst != g.dst) return false;
    for (std::size_t j = 0; j < f.cols.size(); ++j) {
        std::map<int, K> diff = f.cols[j];
        for (const auto& [i, v] : g.cols[j]) {
            auto it = diff.find(i);
            if (it == diff.end())
                diff.emplace(i, -v);
            else
                it->second = it->second - v;
        }
        for (const auto& [i, v] : diff)
            if (!ScalarTraits<K>::negligible(v)) return false;
    }
    return true;
}

/// First differing entry, as "basis labels: lhs vs rhs", for reporting.
template <class K>
std::optional<std::string> first_difference(const Morphism<K>& f, const Morphism<K>& g) {
    if (f.src != g.src || f.dst != g.dst) return "boundary mismatch";
    for (std::size_t j = 0; j < f.cols.size(); ++j) {
        std::map<int, K> diff = f.cols[j];
        for (const auto& [i, v] : g.cols[j]) {
            auto it = diff.find(i);
            if (it == diff.end())
                diff.emplace(i, -v);
            else
                it->second = it->second - v;
        }
        for (const auto& [i, v] : diff)
            if (!ScalarTraits<K>::negligible(v)) {
                std::ostringstream os;
                os << "entry [" << f.dst->element_str(i) << " <- " << f.src->element_str(static_cast<int>(j)) << "] differs";
                return os.str();
            }
    }
    return std::nullopt;
}

namespace detail {

// Canonical split of a junction middle factor m in _aP_b into a tail element
// of _aP and a head element of P_b: the path goes left, an idempotent fills
// the head.
inline std::pair<int, int> split_middle(const ZigzagAlgebra* alg, int m) {
    const PathElement& p = alg->element(m);
    return {m, alg->idempotent(p.source)};
}

}  // namespace detail

/// Horizontal composition: f runs on the left letters, g on the right.
template <class K>
Morphism<K> tensor_h(BimoduleCache& cache, const Morphism<K>& f, const Morphism<K>& g) {
    const ZigzagAlgebra* alg = cache.algebra();
    std::vector<Color> src_word = f.src->word(), dst_word = f.dst->word();
    src_word.insert(src_word.end(), g.src->word().begin(), g.src->word().end());
    dst_word.insert(dst_word.end(), g.dst->word().begin(), g.dst->word().end());
    const WordBimodule* src = cache.get(src_word);
    const WordBimodule* dst = cache.get(dst_word);
    Morphism<K> out = zero_morphism<K>(src, dst, f.degree + g.degree);

    const std::size_t l1 = f.src->length(), l2 = g.src->length();
    const std::size_t l1d = f.dst->length(), l2d = g.dst->length();

    for (std::size_t j = 0; j < src->dim(); ++j) {
        const auto& e = src->element(static_cast<int>(j));
        // split the source element at the junction
        int idx1, idx2;
        if (l1 == 0 && l2 == 0) {
            idx1 = f.src->index_of({e.factors[0]});
            idx2 = g.src->index_of({alg->idempotent(alg->element(e.factors[0]).source)});
        } else if (l1 == 0) {
            int head = e.factors[0];
            idx1 = f.src->index_of({alg->idempotent(alg->element(head).target)});
            idx2 = g.src->index_of(e.factors);
        } else if (l2 == 0) {
            int tail = e.factors.back();
            idx1 = f.src->index_of(e.factors);
            idx2 = g.src->index_of({alg->idempotent(alg->element(tail).source)});
        } else {
            auto [tail, head] = detail::split_middle(alg, e.factors[l1]);
            std::vector<int> fac1(e.factors.begin(), e.factors.begin() + static_cast<long>(l1));
            fac1.push_back(tail);
            std::vector<int> fac2{head};
            fac2.insert(fac2.end(), e.factors.begin() + static_cast<long>(l1) + 1, e.factors.end());
            idx1 = f.src->index_of(fac1);
            idx2 = g.src->index_of(fac2);
        }

        for (const auto& [i1, c1] : f.cols[idx1]) {
            const auto& d1 = f.dst->element(i1);
            for (const auto& [i2, c2] : g.cols[idx2]) {
                const auto& d2 = g.dst->element(i2);
                // rejoin at the junction
                int joined = -1;
                if (l1d == 0 && l2d == 0) {
                    int p = alg->multiply(d1.factors[0], d2.factors[0]);
                    if (p >= 0) joined = dst->index_of({p});
                } else if (l1d == 0) {
                    joined = dst->left_act(d1.factors[0], dst->index_of(d2.factors));
                } else if (l2d == 0) {
                    joined = dst->right_act(dst->index_of(d1.factors), d2.factors[0]);
                } else {
                    int m = alg->multiply(d1.factors.back(), d2.factors[0]);
                    if (m >= 0) {
                        std::vector<int> fac(d1.factors.begin(), d1.factors.end() - 1);
                        fac.push_back(m);
                        fac.insert(fac.end(), d2.factors.begin() + 1, d2.factors.end());
                        joined = dst->index_of(fac);
                    }
                }
                if (joined >= 0) out.accumulate(joined, static_cast<int>(j), c1 * c2);
            }
        }
    }
    return out;
}

/// Checks f(a.b) = a.f(b) and f(b.a) = f(b).a over all algebra basis elements
/// and all source basis elements; returns a counterexample description.
template <class K>
std::optional<std::string> equivariance_defect(const Morphism<K>& f) {
    const ZigzagAlgebra* alg = f.src->algebra();
    for (std::size_t a = 0; a < alg->dim(); ++a) {
        for (std::size_t b = 0; b < f.src->dim(); ++b) {
            for (int side = 0; side < 2; ++side) {
                int ab = side == 0 ? f.src->left_act(static_cast<int>(a), static_cast<int>(b))
                                   : f.src->right_act(static_cast<int>(b), static_cast<int>(a));
                std::map<int, K> lhs;
                if (ab >= 0) lhs = f.cols[ab];
                std::map<int, K> rhs;
                for (const auto& [i, v] : f.cols[b]) {
                    int ai = side == 0 ? f.dst->left_act(static_cast<int>(a), i) : f.dst->right_act(i, static_cast<int>(a));
                    if (ai < 0) continue;
                    auto it = rhs.find(ai);
                    if (it == rhs.end())
                        rhs.emplace(ai, v);
                    else
                        it->second = it->second + v;
                }
                std::map<int, K> diff = lhs;
                for (const auto& [i, v] : rhs) {
                    auto it = diff.find(i);
                    if (it == diff.end())
                        diff.emplace(i, -v);
                    else
                        it->second = it->second - v;
                }
                for (const auto& [i, v] : diff)
                    if (!ScalarTraits<K>::negligible(v)) {
                        std::ostringstream os;
                        os << (side == 0 ? "left" : "right") << " action of " << alg->element(static_cast<int>(a)).str()
                           << " on " << f.src->element_str(static_cast<int>(b)) << " not intertwined";
                        return os.str();
                    }
            }
        }
    }
    return std::nullopt;
}

template <class K>
bool check_equivariance(const Morphism<K>& f) {
    return !equivariance_defect(f).has_value();
}

/// Degree homogeneity: every nonzero entry connects elements whose degrees
/// differ by exactly the morphism degree.
template <class K>
bool check_degree_homogeneous(const Morphism<K>& f) {
    for (std::size_t j = 0; j < f.cols.size(); ++j)
        for (const auto& [i, v] : f.cols[j])
            if (f.dst->element(i).degree != f.src->element(static_cast<int>(j)).degree + f.degree) return false;
    return true;
}

// ----------------------------------------------------- decategorification

/// Matrix of the color's theta endofunctor on the basis [P_i] in canonical
/// vertex order: [2]_v on the own color class diagonal, adjacency entries from
/// the other class.
inline LaurentMatrix theta_matrix(const ZigzagAlgebra& alg, Color color) {
    const auto& g = alg.graph();
    const std::size_t n = g.size();
    LaurentMatrix m = laurent_zero_matrix(n, n);
    Laurent two_v = quantum_integer_v(2);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& vj = g.vertices()[j];
        if (vj.color == color) {
            m[j][j] = two_v;
        } else {
            for (int nb : g.neighbors(vj.id)) m[static_cast<std::size_t>(g.position_of(nb))][j] = Laurent(1);
        }
    }
    return m;
}

/// Multiset of projectives with grading shifts.
using ProjectiveDecomposition = std::map<std::pair<int, int>, long long>;  // (vertex, shift) -> multiplicity

inline ProjectiveDecomposition theta_apply(const BipartiteGraph& g, Color color, const ProjectiveDecomposition& in) {
    ProjectiveDecomposition out;
    for (const auto& [key, mult] : in) {
        auto [v, shift] = key;
        if (g.color_of(v) == color) {
            out[{v, shift - 1}] += mult;
            out[{v, shift + 1}] += mult;
        } else {
            for (int nb : g.neighbors(v)) out[{nb, shift}] += mult;
        }
    }
    return out;
}

}  // namespace dicalc
