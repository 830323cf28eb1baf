#pragma once

// Scalar modes of the engine: symbolic Z[q^±1], exact rational q, complex
// floating q. Matrices and the representation are templated on the scalar
// type; ScalarMode is the runtime tag used by the CLI and the search layer.

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <variant>

#include "laurent.hpp"

namespace lkc3 {

struct ScalarMode {
    enum class Kind { Symbolic, Rational, Complex };

    Kind kind = Kind::Symbolic;
    Rational q_rational{};
    Complex q_complex{};

    static ScalarMode symbolic() { return ScalarMode{}; }
    static ScalarMode rational(const Rational& q) {
        if (q == 0) throw ZeroQError("rational mode requires q != 0");
        ScalarMode m;
        m.kind = Kind::Rational;
        m.q_rational = q;
        return m;
    }
    static ScalarMode complex_mode(const Complex& q) {
        if (q == Complex(0.0, 0.0)) throw ZeroQError("complex mode requires q != 0");
        if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
            throw Error("complex mode requires finite q");
        ScalarMode m;
        m.kind = Kind::Complex;
        m.q_complex = q;
        return m;
    }

    Complex q_as_complex() const {
        switch (kind) {
            case Kind::Rational: return Complex(q_rational.get_d(), 0.0);
            case Kind::Complex: return q_complex;
            case Kind::Symbolic: break;
        }
        throw Error("symbolic mode has no numeric q");
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Symbolic: return "symbolic";
            case Kind::Rational: return "q=" + q_rational.get_str();
            case Kind::Complex: {
                std::ostringstream os;
                os << "q=" << q_complex.real()
                   << (q_complex.imag() < 0 ? "" : "+") << q_complex.imag() << "i";
                return os.str();
            }
        }
        return "?";
    }
};

// ---- scalar trait ---------------------------------------------------------

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<LaurentPoly> {
    static constexpr bool exact = true;
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly from_poly(const LaurentPoly& p, const ScalarMode&) { return p; }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static bool is_one(const LaurentPoly& x) { return x.is_one(); }
    static std::string str(const LaurentPoly& x) { return x.to_string(); }
};

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_poly(const LaurentPoly& p, const ScalarMode& m) {
        return p.eval(m.q_rational);
    }
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool is_one(const Rational& x) { return x == 1; }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarOps<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static Complex from_poly(const LaurentPoly& p, const ScalarMode& m) {
        return p.eval(m.q_complex);
    }
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static bool is_one(const Complex& x) { return x == Complex(1.0, 0.0); }
    static std::string str(const Complex& x) {
        std::ostringstream os;
        os.precision(12);
        os << x.real();
        if (x.imag() != 0.0) os << (x.imag() < 0 ? "" : "+") << x.imag() << "i";
        return os.str();
    }
};

} // namespace lkc3
