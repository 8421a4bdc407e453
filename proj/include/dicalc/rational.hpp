#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dicalc {

// Exact scalars. mpq_class keeps gcd(num, den) = 1 and den > 0 after
// canonicalize(), which is the invariant we rely on everywhere.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Dense integer polynomial, coefficient of x^k at index k. No trailing zeros.
using IntPoly = std::vector<BigInt>;

inline void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const IntPoly& p) {
    return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

// Quotient of an exact division by a monic divisor. Remainder must be zero;
// used for the cyclotomic product formula.
inline IntPoly poly_div_exact_monic(IntPoly num, const IntPoly& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("poly_div_exact_monic: divisor not monic");
    poly_trim(num);
    IntPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
    while (num.size() >= den.size()) {
        BigInt c = num.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        poly_trim(num);
        if (!num.empty() && num.size() >= den.size() && num.back() == 0) poly_trim(num);
    }
    if (!num.empty()) throw std::logic_error("poly_div_exact_monic: nonzero remainder");
    poly_trim(q);
    return q;
}

inline std::string poly_to_string(const IntPoly& p, const std::string& var = "x") {
    if (p.empty()) return "0";
    std::string out;
    for (int k = poly_degree(p); k >= 0; --k) {
        const BigInt& c = p[k];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        bool unit = (a == 1) && k != 0;
        if (!unit) out += a.get_str();
        if (k > 0) {
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace dicalc
