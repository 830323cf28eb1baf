#pragma once

// The q-condition sets P_k, R_k, S_k and the Proposition 5 witness words and
// spectra. Square roots and q^{3/2} use principal branches; membership tests
// both +- expressions, so the branch choice cannot hide a genuine member.

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "laurent.hpp"
#include "words.hpp"

namespace lkc3 {

struct QSetId {
    enum class Tag { P, R, S };
    Tag tag = Tag::P;
    long k = 2;

    std::string name() const {
        const char* t = tag == Tag::P ? "P" : tag == Tag::R ? "R" : "S";
        return std::string(t) + "_" + std::to_string(k);
    }
};

inline QSetId qset_p(long k) { return {QSetId::Tag::P, k}; }
inline QSetId qset_r(long k) { return {QSetId::Tag::R, k}; }
inline QSetId qset_s(long k) { return {QSetId::Tag::S, k}; }

namespace detail {

inline Complex cpow_int(Complex base, long e) {
    if (e < 0) {
        base = Complex(1.0, 0.0) / base;
        e = -e;
    }
    Complex r(1.0, 0.0);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// The paired expressions whose 2k-th powers define membership:
//   P: (q^2 - 2q -+ sqrt(q-4) q^{3/2}) / (2q)
//   R: (1 - 2q  -+ sqrt(1-4q)) / (2q)
inline std::array<Complex, 2> pr_ratios(QSetId::Tag tag, const Complex& q) {
    if (tag == QSetId::Tag::P) {
        const Complex g = q * q - 2.0 * q;
        const Complex h = std::sqrt(q - 4.0) * (q * std::sqrt(q));
        return {(g - h) / (2.0 * q), (g + h) / (2.0 * q)};
    }
    const Complex g = 1.0 - 2.0 * q;
    const Complex h = std::sqrt(1.0 - 4.0 * q);
    return {(g - h) / (2.0 * q), (g + h) / (2.0 * q)};
}

} // namespace detail

inline bool qset_member(const QSetId& set, const Complex& q, double tol = 1e-9) {
    if (q == Complex(0.0, 0.0)) throw ZeroQError("q-set membership requires q != 0");
    switch (set.tag) {
        case QSetId::Tag::P:
            if (q == Complex(4.0, 0.0))
                throw ExcludedPointError("q=4 is excluded from P_k by definition");
            break;
        case QSetId::Tag::R:
            if (q == Complex(0.25, 0.0))
                throw ExcludedPointError("q=1/4 is excluded from R_k by definition");
            break;
        case QSetId::Tag::S:
            break;
    }
    if (set.tag == QSetId::Tag::S) {
        const Complex expr = detail::cpow_int((1.0 - q) / q, 2 * set.k);
        return std::abs(expr - 1.0) <= tol;
    }
    const auto ratios = detail::pr_ratios(set.tag, q);
    for (const Complex& r : ratios) {
        const Complex expr = detail::cpow_int(r, 2 * set.k);
        if (std::abs(expr - 1.0) > tol) return false;
    }
    return true;
}

inline bool qset_member(const QSetId& set, const Rational& q, double tol = 1e-9) {
    return qset_member(set, Complex(q.get_d(), 0.0), tol);
}

// Proposition 5 witness words:
//   P_k: (a2 T)^{2k} T^{-2k}
//   R_k: (a1 a2 a1 T)^{2k} T^{-2k}
//   S_k: (T a1 a2 a1)^{2k} T^{-2k}
inline Word prop5_witness(const QSetId& set) {
    Word w;
    w.n = 3;
    const long reps = 2 * set.k;
    if (reps < 0) throw SpecInvalidError("prop5_witness requires k >= 0");
    for (long r = 0; r < reps; ++r) {
        switch (set.tag) {
            case QSetId::Tag::P:
                w.letters.push_back(alpha(2));
                w.letters.push_back(gen_t());
                break;
            case QSetId::Tag::R:
                w.letters.push_back(alpha(1));
                w.letters.push_back(alpha(2));
                w.letters.push_back(alpha(1));
                w.letters.push_back(gen_t());
                break;
            case QSetId::Tag::S:
                w.letters.push_back(gen_t());
                w.letters.push_back(alpha(1));
                w.letters.push_back(alpha(2));
                w.letters.push_back(alpha(1));
                break;
        }
    }
    for (long r = 0; r < reps; ++r) w.letters.push_back(gen_t_inv());
    return w;
}

// {1, ratio_-^{2k}, ratio_+^{2k}} — the diagonal of the Proposition 5 proof.
// The S family has no paper-backed spectrum expression (see the claim
// registry), so it is rejected here.
inline std::array<Complex, 3> prop5_expected_spectrum(const QSetId& set, const Complex& q) {
    if (set.tag == QSetId::Tag::S)
        throw UnsupportedSetError("no closed-form spectrum is asserted for the S family");
    if (q == Complex(0.0, 0.0)) throw ZeroQError("spectrum requires q != 0");
    const auto ratios = detail::pr_ratios(set.tag, q);
    return {Complex(1.0, 0.0),
            detail::cpow_int(ratios[0], 2 * set.k),
            detail::cpow_int(ratios[1], 2 * set.k)};
}

} // namespace lkc3
