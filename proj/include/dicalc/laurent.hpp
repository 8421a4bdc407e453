#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dicalc/rational.hpp"

namespace dicalc {

/// Integer Laurent polynomials in v. Zero coefficients are never stored.
class Laurent {
  public:
    Laurent() = default;
    Laurent(long c) {  // NOLINT: implicit from integers is convenient
        if (c != 0) coeffs_[0] = c;
    }
    explicit Laurent(const BigInt& c) {
        if (c != 0) coeffs_[0] = c;
    }

    static Laurent monomial(const BigInt& c, int exp) {
        Laurent p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }
    static Laurent v(int exp = 1) { return monomial(1, exp); }

    const std::map<int, BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent out;
        for (const auto& [e, c] : a.coeffs_) out.coeffs_[e] = -c;
        return out;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    /// Ring homomorphism v = 1.
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt a = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool unit = (a == 1) && e != 0;
            if (!unit) os << a.get_str();
            if (e != 0) {
                os << "v";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void add_term(int exp, const BigInt& c) {
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<int, BigInt> coeffs_;
};

/// [k]_v = v^{k-1} + v^{k-3} + ... + v^{1-k}, with [0]_v = 0.
inline Laurent quantum_integer_v(int k) {
    Laurent p;
    for (int e = k - 1; e >= 1 - k; e -= 2) p += Laurent::v(e);
    return p;
}

}  // namespace dicalc
