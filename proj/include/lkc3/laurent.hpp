#pragma once

// Exact arithmetic in Z[q, q^-1], the coefficient ring of the representation.
// A LaurentPoly is a map exponent -> coefficient with no zero coefficients
// stored, so equality is structural and iteration is exponent-sorted.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace lkc3 {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

class LaurentPoly {
public:
    using Terms = std::map<long, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }          // NOLINT(implicit)
    LaurentPoly(const Integer& c) { if (c != 0) terms_[0] = c; } // NOLINT(implicit)

    // The monomial c * q^k.
    static LaurentPoly monomial(const Integer& c, long k) {
        LaurentPoly p;
        if (c != 0) p.terms_[k] = c;
        return p;
    }
    static LaurentPoly q(long k = 1) { return monomial(1, k); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    const Integer& coeff(long k) const {
        static const Integer zero(0);
        auto it = terms_.find(k);
        return it == terms_.end() ? zero : it->second;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka + kb, ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ < b.terms_;
    }

    LaurentPoly pow(long e) const {
        if (e < 0) return invert_unit().pow(-e);
        LaurentPoly r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Units of Z[q^±1] are exactly ±q^k.
    LaurentPoly invert_unit() const {
        if (terms_.size() != 1)
            throw NotAUnitError("invert: " + to_string() + " is not a monomial");
        const auto& [k, c] = *terms_.begin();
        if (c != 1 && c != -1)
            throw NotAUnitError("invert: coefficient of " + to_string() + " is not ±1");
        return monomial(c, -k);
    }

    Rational eval(const Rational& q) const {
        if (q == 0 && !terms_.empty() && min_exp() < 0)
            throw ZeroSpecializationError("cannot evaluate negative powers of q at q=0");
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += Rational(c) * rational_q_pow(q, k);
        return acc;
    }

    Complex eval(const Complex& q) const {
        if (q == Complex(0.0, 0.0) && !terms_.empty() && min_exp() < 0)
            throw ZeroSpecializationError("cannot evaluate negative powers of q at q=0");
        Complex acc(0.0, 0.0);
        for (const auto& [k, c] : terms_) acc += c.get_d() * complex_q_pow(q, k);
        return acc;
    }

    // Exact division; throws if the quotient does not lie in Z[q^±1].
    // Used by fraction-free elimination, where divisibility is guaranteed.
    friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw Error("division by zero polynomial");
        if (a.is_zero()) return LaurentPoly();
        // Shift both to ordinary polynomials in q with nonzero constant/leading terms.
        LaurentPoly rem = a;
        LaurentPoly quot;
        const long db = b.max_exp();
        const Integer& lb = b.terms_.rbegin()->second;
        while (!rem.is_zero()) {
            const long da = rem.max_exp();
            const Integer& la = rem.terms_.rbegin()->second;
            Integer qc = la / lb;
            if (qc * lb != la)
                throw Error("inexact polynomial division (leading coefficient)");
            LaurentPoly t = monomial(qc, da - db);
            quot += t;
            rem -= t * b;
            if (!rem.is_zero() && rem.max_exp() >= da)
                throw Error("inexact polynomial division (no progress)");
        }
        return quot;
    }

    // Canonical text form: terms in increasing exponent, `c*q^k`,
    // coefficient 1 and exponent 0/1 elided, e.g. "-q + q^2", "1 - q".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            const bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit_coeff = (mag == 1) && (k != 0);
            if (!unit_coeff) out += mag.get_str();
            if (k != 0) {
                if (!unit_coeff) out += "*";
                out += (k == 1) ? "q" : "q^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    Terms terms_;

    void add_term(long k, const Integer& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Rational rational_q_pow(const Rational& q, long k) {
        if (k == 0) return Rational(1);
        Rational base = q;
        if (k < 0) {
            base = make_rational(q.get_den(), q.get_num());
            k = -k;
        }
        Rational r(1);
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    static Complex complex_q_pow(Complex q, long k) {
        if (k == 0) return Complex(1.0, 0.0);
        if (k < 0) {
            q = Complex(1.0, 0.0) / q;
            k = -k;
        }
        Complex r(1.0, 0.0);
        while (k > 0) {
            if (k & 1) r *= q;
            q *= q;
            k >>= 1;
        }
        return r;
    }
};

inline std::string to_string(const LaurentPoly& p) { return p.to_string(); }

} // namespace lkc3
