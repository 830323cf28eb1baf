#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lkc3/claims.hpp"
#include "lkc3/eigen.hpp"
#include "lkc3/rep.hpp"

using namespace lkc3;

namespace {

const LaurentPoly one(1);

RingMatrix<LaurentPoly> random_monomial_matrix(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<long> exp_d(-3, 3);
    std::uniform_int_distribution<long> coeff_d(-4, 4);
    RingMatrix<LaurentPoly> m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = LaurentPoly::monomial(coeff_d(rng), exp_d(rng));
    return m;
}

// Leibniz sum over all permutations; independent of the library's cofactor
// and Bareiss routes.
LaurentPoly det_leibniz(const RingMatrix<LaurentPoly>& m) {
    std::vector<int> perm(static_cast<size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) perm[static_cast<size_t>(i)] = i;
    LaurentPoly acc;
    do {
        int inversions = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        LaurentPoly term(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < m.dim(); ++i) term *= m.at(i, perm[static_cast<size_t>(i)]);
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

TEST_CASE("determinants of the printed generators") {
    CHECK(mat_det(printed::sigma1()) == LaurentPoly::monomial(-1, 3));
    CHECK(mat_det(printed::sigma2()) == LaurentPoly::monomial(-1, 3));
    CHECK(mat_det(printed::alpha1()) == LaurentPoly(-1));
    CHECK(mat_det(printed::alpha2()) == LaurentPoly(-1));
    CHECK(mat_det(printed::t_matrix()) == LaurentPoly::monomial(-1, 3));
    CHECK(mat_det(RingMatrix<LaurentPoly>::identity(3)) == one);
}

TEST_CASE("characteristic polynomial, dim 3 only") {
    const LaurentPoly q = LaurentPoly::q();

    const auto a2t = printed::alpha2() * printed::t_matrix();
    const CharPoly3<LaurentPoly> cp = mat_char_poly(a2t);
    CHECK(cp.c1 == q * q - q);
    CHECK(cp.c2 == q.pow(3) - q * q);
    CHECK(cp.c3 == q.pow(3));

    const CharPoly3<LaurentPoly> cpi = mat_char_poly(RingMatrix<LaurentPoly>::identity(3));
    CHECK(cpi.c1 == LaurentPoly(3));
    CHECK(cpi.c2 == LaurentPoly(3));
    CHECK(cpi.c3 == one);

    const CharPoly3<LaurentPoly> cpt = mat_char_poly(printed::t_matrix());
    CHECK(cpt.c1 == q);
    CHECK(cpt.c2 == -(q * q));
    CHECK(cpt.c3 == -q.pow(3));

    CHECK_THROWS_AS(mat_char_poly(RingMatrix<LaurentPoly>::identity(4)), UnsupportedDimError);
}

TEST_CASE("product dimension mismatch") {
    CHECK_THROWS_AS(RingMatrix<LaurentPoly>::identity(3) * RingMatrix<LaurentPoly>::identity(4),
                    DimMismatchError);
}

TEST_CASE("eigenvalues of known matrices") {
    RepContext<Rational> ctx(3, ScalarMode::rational(make_rational(2)));

    // rho(a2 T) at q=2: roots of (l-2)(l^2+4)
    const auto m = promote_to_complex(ctx.word_matrix(Word(3, {alpha(2), gen_t()})));
    CHECK(multiset_close(mat_eigenvalues(m),
                         {Complex(2, 0), Complex(0, 2), Complex(0, -2)}, 1e-9));

    // scalar matrix q^2 I at q=2
    const auto s = promote_to_complex(ctx.word_matrix(Word(3, {gen_t(), gen_t()})));
    CHECK(multiset_close(mat_eigenvalues(s), {Complex(4, 0), Complex(4, 0), Complex(4, 0)},
                         1e-12));

    // rho(T a1 a2 a1) at q=2: {2, (-3 ± i sqrt 7)/2}
    const auto w = promote_to_complex(
        ctx.word_matrix(Word(3, {gen_t(), alpha(1), alpha(2), alpha(1)})));
    const double s7 = std::sqrt(7.0);
    CHECK(multiset_close(mat_eigenvalues(w),
                         {Complex(2, 0), Complex(-1.5, s7 / 2), Complex(-1.5, -s7 / 2)},
                         1e-9));
}

TEST_CASE("det is multiplicative on random symbolic pairs") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_monomial_matrix(rng, 3);
        const auto b = random_monomial_matrix(rng, 3);
        REQUIRE(mat_det(a * b) == mat_det(a) * mat_det(b));
    }
}

TEST_CASE("Bareiss route agrees with the Leibniz oracle above dim 4") {
    std::mt19937 rng(29u);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m5 = random_monomial_matrix(rng, 5);
        REQUIRE(mat_det(m5) == det_leibniz(m5));
        const auto m6 = random_monomial_matrix(rng, 6);
        REQUIRE(mat_det(m6) == det_leibniz(m6));
    }
    // and the cofactor route at dim 4
    for (int trial = 0; trial < 20; ++trial) {
        const auto m4 = random_monomial_matrix(rng, 4);
        REQUIRE(mat_det(m4) == det_leibniz(m4));
    }
}

TEST_CASE("Cayley-Hamilton for the twelve word matrices") {
    RepContext<LaurentPoly> ctx(3);
    const std::vector<Word> words = {
        Word(3, {sigma(1)}),
        Word(3, {sigma(2)}),
        Word(3, {sigma_inv(1)}),
        Word(3, {sigma_inv(2)}),
        Word(3, {alpha(1)}),
        Word(3, {alpha(2)}),
        Word(3, {alpha(1), alpha(2)}),
        Word(3, {alpha(2), alpha(1)}),
        Word(3, {alpha(1), alpha(2), alpha(1)}),
        Word(3, {gen_t()}),
        Word(3, {gen_t_inv()}),
        Word(3, {alpha(2), gen_t()}),
    };
    REQUIRE(words.size() == 12);
    for (const Word& w : words) {
        const auto m = ctx.word_matrix(w);
        REQUIRE(char_poly_at_matrix(mat_char_poly(m), m).is_zero());
    }
}

TEST_CASE("eigenvalue multiset matches trace and det") {
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        RingMatrix<Complex> m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = Complex(d(rng), d(rng));
        const auto ev = mat_eigenvalues(m);
        const Complex sum = ev[0] + ev[1] + ev[2];
        const Complex prod = ev[0] * ev[1] * ev[2];
        const Complex tr = m.trace();
        const Complex det = mat_det(m);
        REQUIRE(std::abs(sum - tr) <= 1e-8 * std::max(1.0, std::abs(tr)));
        REQUIRE(std::abs(prod - det) <= 1e-8 * std::max(1.0, std::abs(det)));
    }
}
