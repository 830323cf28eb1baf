#pragma once

// Dense square matrices over a scalar mode.
//
// Convention (fixed project-wide): row r holds the coordinates of the image
// of basis vector e_r, and words act left-to-right, so rho(uv) = rho(u)*rho(v)
// with u applied first. This is the unique convention under which the printed
// rho(T) equals rho(sigma2)rho(alpha2)rho(alpha1) and rho(T)^2 = q^2 I.

#include <array>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace lkc3 {

template <class S>
class RingMatrix {
public:
    RingMatrix() : dim_(0) {}
    explicit RingMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, ScalarOps<S>::zero()) {}

    static RingMatrix identity(int dim) {
        RingMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = ScalarOps<S>::one();
        return m;
    }

    int dim() const { return dim_; }
    S& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const S& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    friend RingMatrix operator*(const RingMatrix& x, const RingMatrix& y) {
        if (x.dim_ != y.dim_)
            throw DimMismatchError("matrix product: " + std::to_string(x.dim_) +
                                   " vs " + std::to_string(y.dim_));
        RingMatrix r(x.dim_);
        for (int i = 0; i < x.dim_; ++i)
            for (int k = 0; k < x.dim_; ++k) {
                const S& xik = x.at(i, k);
                if (ScalarOps<S>::is_zero(xik)) continue;
                for (int j = 0; j < x.dim_; ++j)
                    r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }

    RingMatrix& operator*=(const RingMatrix& y) { *this = *this * y; return *this; }

    friend RingMatrix operator*(const S& c, const RingMatrix& m) {
        RingMatrix r(m.dim_);
        for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
        return r;
    }
    friend RingMatrix operator+(const RingMatrix& x, const RingMatrix& y) {
        if (x.dim_ != y.dim_) throw DimMismatchError("matrix sum");
        RingMatrix r(x.dim_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend RingMatrix operator-(const RingMatrix& x, const RingMatrix& y) {
        if (x.dim_ != y.dim_) throw DimMismatchError("matrix difference");
        RingMatrix r(x.dim_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend bool operator==(const RingMatrix& x, const RingMatrix& y) {
        return x.dim_ == y.dim_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RingMatrix& x, const RingMatrix& y) { return !(x == y); }

    bool is_identity() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (i == j ? !ScalarOps<S>::is_one(at(i, j)) : !ScalarOps<S>::is_zero(at(i, j)))
                    return false;
            }
        return true;
    }

    bool is_zero() const {
        for (const S& x : a_)
            if (!ScalarOps<S>::is_zero(x)) return false;
        return true;
    }

    S trace() const {
        S t = ScalarOps<S>::zero();
        for (int i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < dim_; ++i) {
            out += "[";
            for (int j = 0; j < dim_; ++j) {
                if (j) out += ", ";
                out += ScalarOps<S>::str(at(i, j));
            }
            out += "]";
            if (i + 1 < dim_) out += "\n";
        }
        return out;
    }

private:
    int dim_;
    std::vector<S> a_;
};

namespace detail {

// Cofactor expansion along the first row; fine up to dim 4.
template <class S>
S det_cofactor(const RingMatrix<S>& m) {
    const int n = m.dim();
    if (n == 0) return ScalarOps<S>::one();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    S acc = ScalarOps<S>::zero();
    for (int j = 0; j < n; ++j) {
        if (ScalarOps<S>::is_zero(m.at(0, j))) continue;
        RingMatrix<S> sub(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        S term = m.at(0, j) * det_cofactor(sub);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

template <class S>
S scalar_divide(const S& a, const S& b) { return a / b; }

inline LaurentPoly scalar_divide(const LaurentPoly& a, const LaurentPoly& b) {
    return divide_exact(a, b);
}

// Bareiss fraction-free elimination; every division is exact in the ring.
template <class S>
S det_bareiss(RingMatrix<S> m) {
    const int n = m.dim();
    S prev = ScalarOps<S>::one();
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        if (ScalarOps<S>::is_zero(m.at(k, k))) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (!ScalarOps<S>::is_zero(m.at(r, k))) { p = r; break; }
            if (p < 0) return ScalarOps<S>::zero();
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                S num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = scalar_divide(num, prev);
            }
        prev = m.at(k, k);
    }
    S d = m.at(n - 1, n - 1);
    if (neg) return ScalarOps<S>::zero() - d;
    return d;
}

} // namespace detail

template <class S>
S mat_det(const RingMatrix<S>& m) {
    if (m.dim() <= 4) return detail::det_cofactor(m);
    return detail::det_bareiss(m);
}

// Monic cubic lambda^3 - c1 lambda^2 + c2 lambda - c3 with c1 = trace,
// c2 = sum of principal 2x2 minors, c3 = det.
template <class S>
struct CharPoly3 {
    S c1, c2, c3;

    std::string to_string() const {
        return "l^3 - (" + ScalarOps<S>::str(c1) + ")*l^2 + (" +
               ScalarOps<S>::str(c2) + ")*l - (" + ScalarOps<S>::str(c3) + ")";
    }
};

template <class S>
CharPoly3<S> mat_char_poly(const RingMatrix<S>& m) {
    if (m.dim() != 3)
        throw UnsupportedDimError("characteristic polynomial implemented for dim 3, got dim " +
                                  std::to_string(m.dim()));
    CharPoly3<S> p{ScalarOps<S>::zero(), ScalarOps<S>::zero(), ScalarOps<S>::zero()};
    p.c1 = m.trace();
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    };
    p.c2 = minor2(0, 1, 0, 1) + minor2(0, 2, 0, 2) + minor2(1, 2, 1, 2);
    p.c3 = mat_det(m);
    return p;
}

// p(M) = M^3 - c1 M^2 + c2 M - c3 I ; zero by Cayley-Hamilton.
template <class S>
RingMatrix<S> char_poly_at_matrix(const CharPoly3<S>& p, const RingMatrix<S>& m) {
    RingMatrix<S> m2 = m * m;
    RingMatrix<S> m3 = m2 * m;
    RingMatrix<S> id = RingMatrix<S>::identity(m.dim());
    return m3 - p.c1 * m2 + p.c2 * m - p.c3 * id;
}

} // namespace lkc3
