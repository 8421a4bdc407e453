#pragma once

#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicalc/rational.hpp"

namespace dicalc {

inline unsigned euler_phi(unsigned m) {
    unsigned result = m, p = 2;
    while (p * p <= m) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
        ++p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Phi_m via x^m - 1 = prod_{d | m} Phi_d and exact division by the
/// lower-order factors.
inline IntPoly cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::map<unsigned, IntPoly> memo;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;

    IntPoly xm1(m + 1, BigInt(0));  // x^m - 1
    xm1[0] = -1;
    xm1[m] = 1;
    IntPoly divisor{1};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
    IntPoly phi = poly_div_exact_monic(std::move(xm1), divisor);
    memo[m] = phi;
    return phi;
}

/// Q(q) for q a primitive 2n-th root of unity, realized as Q[x]/Phi_{2n}(x).
/// Elements of the field reference it by pointer, so keep the field alive for
/// as long as any of its numbers.
class CyclotomicField {
  public:
    explicit CyclotomicField(unsigned n) : n_(n), modulus_(cyclotomic_polynomial(2 * n)) {
        if (n == 0) throw std::invalid_argument("CyclotomicField: n must be positive");
        deg_ = static_cast<unsigned>(poly_degree(modulus_));
        // x^(deg+i) reduced mod Phi_{2n}, i = 0..deg-2; integral since monic.
        if (deg_ >= 1) {
            std::vector<BigInt> cur(deg_, BigInt(0));  // x^deg == -lower part of modulus
            for (unsigned j = 0; j < deg_; ++j) cur[j] = -modulus_[j];
            for (unsigned i = 0; i + 1 < deg_; ++i) {
                powtab_.push_back(cur);
                // multiply by x
                BigInt top = cur[deg_ - 1];
                for (unsigned j = deg_ - 1; j > 0; --j) cur[j] = cur[j - 1];
                cur[0] = 0;
                for (unsigned j = 0; j < deg_; ++j) cur[j] -= top * modulus_[j];
            }
            powtab_.push_back(cur);
        }
    }

    unsigned n() const { return n_; }
    unsigned degree() const { return deg_; }
    const IntPoly& modulus() const { return modulus_; }

    // coefficients of x^(deg+i) mod Phi_{2n}, 0 <= i <= deg-1
    const std::vector<BigInt>& reduced_power(unsigned i) const { return powtab_.at(i); }

  private:
    unsigned n_, deg_;
    IntPoly modulus_;
    std::vector<std::vector<BigInt>> powtab_;
};

/// Element of Q(q): integer numerator polynomial of degree < phi(2n) over a
/// common positive denominator, normalized so gcd(content, den) = 1.
class Cyc {
  public:
    Cyc() : field_(nullptr), den_(1) {}
    explicit Cyc(const CyclotomicField* f) : field_(f), num_(f->degree(), BigInt(0)), den_(1) {}
    Cyc(const CyclotomicField* f, const Rational& r) : Cyc(f) {
        num_[0] = r.get_num();
        den_ = r.get_den();
    }
    Cyc(const CyclotomicField* f, long value) : Cyc(f) { num_[0] = value; }

    static Cyc from_coeffs(const CyclotomicField* f, std::vector<Rational> coeffs) {
        if (coeffs.size() != f->degree()) throw std::invalid_argument("Cyc: wrong coefficient count");
        Cyc x(f);
        BigInt common = 1;
        for (auto& c : coeffs) common = lcm(common, BigInt(c.get_den()));
        for (unsigned i = 0; i < f->degree(); ++i) x.num_[i] = BigInt(coeffs[i].get_num()) * (common / coeffs[i].get_den());
        x.den_ = common;
        x.normalize();
        return x;
    }

    /// q^e for any integer e (q^{2n} = 1).
    static Cyc q_power(const CyclotomicField* f, long e) {
        long m = 2L * f->n();
        long r = ((e % m) + m) % m;
        Cyc x(f);
        // x^r mod Phi: shift and reduce with the power table
        if (static_cast<unsigned>(r) < f->degree()) {
            x.num_[r] = 1;
        } else {
            const auto& row = f->reduced_power(static_cast<unsigned>(r) - f->degree());
            for (unsigned j = 0; j < f->degree(); ++j) x.num_[j] = row[j];
        }
        return x;
    }

    const CyclotomicField* field() const { return field_; }

    bool is_zero() const {
        for (const auto& c : num_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const { return *this == Cyc(field_, 1); }

    std::vector<Rational> coeffs() const {
        std::vector<Rational> out(num_.size());
        for (std::size_t i = 0; i < num_.size(); ++i) {
            out[i] = Rational(num_[i], den_);
            out[i].canonicalize();
        }
        return out;
    }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        a.check_same(b);
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        a.check_same(b);
        Cyc out(a.field_);
        BigInt g = gcd(a.den_, b.den_);
        BigInt fa = b.den_ / g, fb = a.den_ / g;
        for (unsigned i = 0; i < a.size(); ++i) out.num_[i] = a.num_[i] * fa + b.num_[i] * fb;
        out.den_ = a.den_ * fa;
        out.normalize();
        return out;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
    friend Cyc operator-(const Cyc& a) {
        Cyc out = a;
        for (auto& c : out.num_) c = -c;
        return out;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        a.check_same(b);
        const unsigned d = a.size();
        std::vector<BigInt> prod(2 * d - 1, BigInt(0));
        for (unsigned i = 0; i < d; ++i) {
            if (a.num_[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (b.num_[j] == 0) continue;
                prod[i + j] += a.num_[i] * b.num_[j];
            }
        }
        Cyc out(a.field_);
        for (unsigned i = 0; i < d; ++i) out.num_[i] = prod[i];
        for (unsigned i = d; i < 2 * d - 1; ++i) {
            if (prod[i] == 0) continue;
            const auto& row = a.field_->reduced_power(i - d);
            for (unsigned j = 0; j < d; ++j) out.num_[j] += prod[i] * row[j];
        }
        out.den_ = a.den_ * b.den_;
        out.normalize();
        return out;
    }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_{2n} over the rationals.
    Cyc inverse() const {
        if (is_zero()) throw std::domain_error("Cyc::inverse: division by zero");
        using QPoly = std::vector<Rational>;
        auto deg = [](const QPoly& p) {
            int d = static_cast<int>(p.size()) - 1;
            while (d >= 0 && p[d] == 0) --d;
            return d;
        };
        const unsigned d = size();
        QPoly r0(field_->modulus().size());
        for (std::size_t i = 0; i < field_->modulus().size(); ++i) r0[i] = Rational(field_->modulus()[i]);
        QPoly r1(d);
        for (unsigned i = 0; i < d; ++i) {
            r1[i] = Rational(num_[i], den_);
            r1[i].canonicalize();
        }
        QPoly s0{Rational(0)}, s1{Rational(1)};  // Bezout coefficients of the second argument
        while (deg(r1) > 0) {
            // r0 = q*r1 + r2
            QPoly q(static_cast<std::size_t>(deg(r0) - deg(r1) + 1), Rational(0));
            QPoly rem = r0;
            while (deg(rem) >= deg(r1)) {
                int shift = deg(rem) - deg(r1);
                Rational c = rem[deg(rem)] / r1[deg(r1)];
                q[shift] += c;
                for (int i = 0; i <= deg(r1); ++i) rem[i + shift] -= c * r1[i];
                while (deg(rem) >= 0 && rem[deg(rem)] == 0) rem.pop_back();
                if (rem.empty()) break;
            }
            QPoly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            r0 = r1;
            r1 = rem.empty() ? QPoly{Rational(0)} : rem;
            s0 = s1;
            s1 = s2;
        }
        if (deg(r1) != 0 || r1[0] == 0) throw std::logic_error("Cyc::inverse: element not invertible");
        std::vector<Rational> coeffs(d, Rational(0));
        for (std::size_t i = 0; i < s1.size() && i < d; ++i) coeffs[i] = s1[i] / r1[0];
        return from_coeffs(field_, std::move(coeffs));
    }

    /// Numeric embedding with q = exp(i pi / n).
    std::complex<double> embed() const {
        const double pi = 3.14159265358979323846;
        std::complex<double> q = std::polar(1.0, pi / static_cast<double>(field_->n()));
        std::complex<double> acc(0.0, 0.0), p(1.0, 0.0);
        for (unsigned i = 0; i < size(); ++i) {
            acc += num_[i].get_d() * p;
            p *= q;
        }
        return acc / den_.get_d();
    }

    std::string str() const {
        std::vector<Rational> c = coeffs();
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            if (c[i] == 0) continue;
            Rational a = abs(c[i]);
            if (first) {
                if (c[i] < 0) os << "-";
                first = false;
            } else {
                os << (c[i] < 0 ? " - " : " + ");
            }
            bool unit = (a == 1) && i != 0;
            if (!unit) os << a.get_str();
            if (i != 0) {
                if (!unit) os << "*";
                os << "q";
                if (i != 1) os << "^" << i;
            }
        }
        if (first) return "0";
        return os.str();
    }

  private:
    unsigned size() const { return static_cast<unsigned>(num_.size()); }
    void check_same(const Cyc& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Cyc: mixed cyclotomic fields");
    }
    void normalize() {
        BigInt g = den_;
        for (const auto& c : num_) {
            g = gcd(g, c);
            if (g == 1) break;
        }
        if (g > 1) {
            for (auto& c : num_) c /= g;
            den_ /= g;
        }
        if (den_ < 0) {  // den_ is kept positive; gmp gcd is nonnegative
            den_ = -den_;
            for (auto& c : num_) c = -c;
        }
    }
    const CyclotomicField* field_;
    std::vector<BigInt> num_;
    BigInt den_;
};

/// [k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}; [0]_q = 0.
inline Cyc quantum_integer_q(const CyclotomicField* f, int k) {
    Cyc sum(f);
    for (int e = k - 1; e >= 1 - k; e -= 2) sum += Cyc::q_power(f, e);
    return sum;
}

}  // namespace dicalc
