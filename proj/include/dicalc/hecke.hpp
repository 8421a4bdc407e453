#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicalc/laurent.hpp"

namespace dicalc {

enum class Color : unsigned char { S, T };

inline Color opposite(Color c) { return c == Color::S ? Color::T : Color::S; }
inline char color_char(Color c) { return c == Color::S ? 's' : 't'; }

inline std::string word_str(const std::vector<Color>& w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (Color c : w) s += color_char(c);
    return s;
}

/// Alternating word in s,t of the given length, identified by its rightmost
/// symbol. Length 0 is the empty word.
struct DihedralWord {
    Color rightmost = Color::S;
    int length = 0;

    /// Letters in diagram order, leftmost first.
    std::vector<Color> letters() const {
        std::vector<Color> out(length);
        for (int pos = 1; pos <= length; ++pos)  // pos counts from the right
            out[length - pos] = (pos % 2 == 1) ? rightmost : opposite(rightmost);
        return out;
    }

    std::string str() const {
        std::string s;
        for (Color c : letters()) s += color_char(c);
        return s.empty() ? "empty" : s;
    }

    friend bool operator<(const DihedralWord& a, const DihedralWord& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.length == 0) return false;
        return a.rightmost < b.rightmost;
    }
    friend bool operator==(const DihedralWord& a, const DihedralWord& b) {
        return a.length == b.length && (a.length == 0 || a.rightmost == b.rightmost);
    }
};

/// d^k_l coefficients: d^1_1 = 1, zero unless 0 < k <= l with l-k even,
/// d^k_l = d^{k-1}_{l-1} - d^k_{l-2}.
class DTable {
  public:
    explicit DTable(int lmax) : lmax_(lmax), entries_((lmax + 1) * (lmax + 1), 0) {
        if (lmax < 1) throw std::invalid_argument("DTable: lmax must be >= 1");
        at(1, 1) = 1;
        for (int l = 2; l <= lmax; ++l)
            for (int k = 1; k <= l; ++k) {
                if ((l - k) % 2 != 0) continue;
                long long a = (k - 1 >= 1) ? at(k - 1, l - 1) : 0;
                long long b = (l - 2 >= 1 && k <= l - 2) ? at(k, l - 2) : 0;
                at(k, l) = a - b;
            }
    }

    int lmax() const { return lmax_; }

    long long d(int k, int l) const {
        if (k < 1 || l < 1 || k > l || (l - k) % 2 != 0) return 0;
        if (l > lmax_) throw std::out_of_range("DTable: l beyond table");
        return entries_[static_cast<std::size_t>(l) * (lmax_ + 1) + k];
    }

  private:
    long long& at(int k, int l) { return entries_[static_cast<std::size_t>(l) * (lmax_ + 1) + k]; }

    int lmax_;
    std::vector<long long> entries_;
};

inline DTable d_table(int lmax) { return DTable(lmax); }

/// Expansion of a Kazhdan-Lusztig element in the Bott-Samelson basis.
struct BSExpansion {
    std::map<DihedralWord, long long> terms;
};

/// theta_{s_l} (or theta_{t_l}) = sum_k d^k_l * theta over the alternating
/// word of length k with the same rightmost color.
inline BSExpansion kl_in_bs(int l, Color rightmost) {
    if (l < 1) throw std::invalid_argument("kl_in_bs: l must be >= 1");
    DTable t(l);
    BSExpansion out;
    for (int k = l; k >= 1; k -= 2) {
        long long c = t.d(k, l);
        if (c != 0) out.terms[DihedralWord{rightmost, k}] = c;
    }
    return out;
}

/// Normalized Chebyshev recursion U~_0 = 1, U~_1 = X, U~_{k+1} = X U~_k - U~_{k-1}.
/// Coefficient of X^i at index i.
inline std::vector<long long> chebyshev(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev: k must be >= 0");
    std::vector<long long> prev{1};
    if (k == 0) return prev;
    std::vector<long long> cur{0, 1};
    for (int i = 1; i < k; ++i) {
        std::vector<long long> next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

using LaurentMatrix = std::vector<std::vector<Laurent>>;

inline LaurentMatrix laurent_zero_matrix(std::size_t r, std::size_t c) {
    return LaurentMatrix(r, std::vector<Laurent>(c));
}

inline LaurentMatrix laurent_mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw std::invalid_argument("laurent_mat_mul: shape mismatch");
    LaurentMatrix out = laurent_zero_matrix(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline LaurentMatrix laurent_mat_add(LaurentMatrix a, const LaurentMatrix& b, const Laurent& scale = Laurent(1)) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += scale * b[i][j];
    return a;
}

inline bool laurent_mat_equal(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

/// Alternating product of length k whose leftmost factor has color `leftmost`,
/// e.g. leftmost = S, k = 4: Ms*Mt*Ms*Mt.
inline LaurentMatrix alternating_theta_product(const LaurentMatrix& ms, const LaurentMatrix& mt, int k, Color leftmost) {
    if (k < 1) throw std::invalid_argument("alternating_theta_product: k must be >= 1");
    Color c = leftmost;
    LaurentMatrix out = (c == Color::S) ? ms : mt;
    for (int i = 1; i < k; ++i) {
        c = opposite(c);
        out = laurent_mat_mul(out, (c == Color::S) ? ms : mt);
    }
    return out;
}

struct BsCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // first violating entry when failing
};

struct BsReport {
    std::vector<BsCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline BsCheck matrix_check(const std::string& name, const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
    BsCheck c{name, true, ""};
    for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < lhs[i].size(); ++j)
            if (lhs[i][j] != rhs[i][j]) {
                c.pass = false;
                c.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + lhs[i][j].str() + " vs " + rhs[i][j].str();
                return c;
            }
    return c;
}

constexpr int kInfinity = 0;  // n = 0 encodes the infinite dihedral group

/// Checks Ms^2 = [2]_v Ms, Mt^2 = [2]_v Mt, and for finite n the relation
/// sum_k d^k_n (alternating product). Products are taken leftmost-first, as in
/// the matrix identities the Grothendieck-group computations use.
inline BsReport verify_bs_relations(const LaurentMatrix& ms, const LaurentMatrix& mt, int n) {
    if (ms.size() != mt.size() || ms.empty() || ms.size() != ms[0].size() || mt.size() != mt[0].size())
        throw std::invalid_argument("verify_bs_relations: matrices must be square of equal size");
    BsReport report;
    Laurent two_v = quantum_integer_v(2);

    LaurentMatrix ms2 = laurent_mat_mul(ms, ms);
    LaurentMatrix ms_scaled = laurent_zero_matrix(ms.size(), ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) ms_scaled[i][j] = two_v * ms[i][j];
    report.checks.push_back(matrix_check("theta_s^2 = [2]_v theta_s", ms2, ms_scaled));

    LaurentMatrix mt2 = laurent_mat_mul(mt, mt);
    LaurentMatrix mt_scaled = laurent_zero_matrix(mt.size(), mt.size());
    for (std::size_t i = 0; i < mt.size(); ++i)
        for (std::size_t j = 0; j < mt.size(); ++j) mt_scaled[i][j] = two_v * mt[i][j];
    report.checks.push_back(matrix_check("theta_t^2 = [2]_v theta_t", mt2, mt_scaled));

    if (n != kInfinity) {
        if (n < 2) throw std::invalid_argument("verify_bs_relations: finite n must be >= 2");
        DTable t(n);
        LaurentMatrix lhs = laurent_zero_matrix(ms.size(), ms.size());
        LaurentMatrix rhs = laurent_zero_matrix(ms.size(), ms.size());
        for (int k = n; k >= 1; k -= 2) {
            Laurent coeff(t.d(k, n));
            if (coeff.is_zero()) continue;
            lhs = laurent_mat_add(std::move(lhs), alternating_theta_product(ms, mt, k, Color::S), coeff);
            rhs = laurent_mat_add(std::move(rhs), alternating_theta_product(ms, mt, k, Color::T), coeff);
        }
        report.checks.push_back(matrix_check("sum_k d^k_n theta_(s..) = sum_k d^k_n theta_(t..)", lhs, rhs));
    }
    return report;
}

}  // namespace dicalc
