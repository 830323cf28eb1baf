#pragma once

// Numeric eigenvalues for dim-3 complex matrices: closed-form cubic roots
// (depressed cubic + Cardano with branch selection) polished by Newton steps.
// The q=4 / q=1/4 specializations are genuinely degenerate, so the solver
// has to survive repeated roots.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "matrix.hpp"

namespace lkc3 {

namespace detail {

inline Complex cbrt_principal(const Complex& z) {
    if (z == Complex(0.0, 0.0)) return z;
    const double r = std::abs(z);
    const double th = std::arg(z);
    return std::polar(std::cbrt(r), th / 3.0);
}

} // namespace detail

// Roots of lambda^3 + a2 lambda^2 + a1 lambda + a0.
inline std::array<Complex, 3> cubic_roots(const Complex& a2, const Complex& a1, const Complex& a0) {
    // Depressed form t^3 + p t + s, lambda = t - a2/3.
    const Complex shift = a2 / 3.0;
    const Complex p = a1 - a2 * a2 / 3.0;
    const Complex s = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

    const double scale = std::max({1.0, std::abs(a2), std::abs(a1), std::abs(a0)});
    std::array<Complex, 3> t;
    if (std::abs(p) < 1e-14 * scale && std::abs(s) < 1e-14 * scale * scale) {
        t = {Complex(0, 0), Complex(0, 0), Complex(0, 0)};
    } else {
        const Complex d = std::sqrt(s * s / 4.0 + p * p * p / 27.0);
        Complex u3 = -s / 2.0 + d;
        if (std::abs(-s / 2.0 - d) > std::abs(u3)) u3 = -s / 2.0 - d;
        Complex u = detail::cbrt_principal(u3);
        if (std::abs(u) < 1e-300) {
            // s ~ 0 and the chosen branch collapsed: roots of t(t^2 + p).
            const Complex sq = std::sqrt(-p);
            t = {Complex(0, 0), sq, -sq};
        } else {
            const Complex w(-0.5, std::sqrt(3.0) / 2.0);
            Complex uk = u;
            for (int k = 0; k < 3; ++k) {
                t[static_cast<size_t>(k)] = uk - p / (3.0 * uk);
                uk *= w;
            }
        }
    }

    std::array<Complex, 3> roots;
    for (int k = 0; k < 3; ++k) roots[static_cast<size_t>(k)] = t[static_cast<size_t>(k)] - shift;

    // Newton polish; keep a step only if it reduces the residual.
    auto f = [&](const Complex& x) { return ((x + a2) * x + a1) * x + a0; };
    auto fp = [&](const Complex& x) { return (3.0 * x + 2.0 * a2) * x + a1; };
    for (auto& r : roots) {
        for (int it = 0; it < 6; ++it) {
            const Complex fx = f(r);
            const Complex d1 = fp(r);
            if (std::abs(d1) < 1e-300) break;
            const Complex next = r - fx / d1;
            if (std::abs(f(next)) < std::abs(fx)) r = next; else break;
        }
    }
    return roots;
}

inline RingMatrix<Complex> promote_to_complex(const RingMatrix<Rational>& m) {
    RingMatrix<Complex> r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = Complex(m.at(i, j).get_d(), 0.0);
    return r;
}

inline std::array<Complex, 3> mat_eigenvalues(const RingMatrix<Complex>& m) {
    if (m.dim() != 3)
        throw UnsupportedDimError("eigenvalues implemented for dim 3, got dim " +
                                  std::to_string(m.dim()));
    // Scalar matrices get exact answers; this also rescues the genuinely
    // repeated spectra (Proposition 5 members give rho(x) ~ I), where the
    // characteristic-polynomial route loses two thirds of the precision.
    {
        const Complex mean = m.trace() / 3.0;
        double dev = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                dev = std::max(dev, std::abs(m.at(i, j) - (i == j ? mean : Complex(0, 0))));
        if (dev <= 1e-11 * std::max(1.0, std::abs(mean))) return {mean, mean, mean};
    }
    const CharPoly3<Complex> cp = mat_char_poly(m);
    return cubic_roots(-cp.c1, cp.c2, -cp.c3);
}

// Multiset comparison: best assignment over the 6 permutations, each pair
// within tol * max(1, |b|).
inline bool multiset_close(std::array<Complex, 3> a, const std::array<Complex, 3>& b, double tol) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            const double allowed = tol * std::max(1.0, std::abs(b[static_cast<size_t>(i)]));
            if (std::abs(a[static_cast<size_t>(idx[static_cast<size_t>(i)])] - b[static_cast<size_t>(i)]) > allowed) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

} // namespace lkc3
