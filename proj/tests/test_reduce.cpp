#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkc3/claims.hpp"
#include "lkc3/reduce.hpp"

using namespace lkc3;

namespace {

E1Spec spec_of(std::vector<std::string> names, SpecForm form = SpecForm::TrailingT) {
    E1Spec s;
    s.r = static_cast<int>(names.size());
    s.form = form;
    for (const auto& nm : names) s.blocks.push_back(*alpha_from_name(nm));
    return s;
}

} // namespace

TEST_CASE("Example 10(i), case b: reduced = A_2") {
    const auto rr = conjugate_reduce(spec_of({"a1", "a2", "a1"}), {ReduceCase::Kind::B, 0});
    CHECK(rr.conjugator == parse_word("a1 T", 3));
    CHECK(rr.reduced == parse_word("a2", 3));
    CHECK(alpha_name(rr.repeated) == "a2");
    CHECK(rr.s == 1);
}

TEST_CASE("Example 10(i), case a: reduced = A_2 T A_3 A_1 T^-1") {
    const auto rr = conjugate_reduce(spec_of({"a2", "a1a2", "a1"}), {ReduceCase::Kind::A, 0});
    CHECK(rr.conjugator == parse_word("a2 T", 3));
    CHECK(rr.reduced == parse_word("a1 a2 T a1 a2 T^-1", 3));
    CHECK(alpha_name(rr.repeated) == "a1a2");
}

TEST_CASE("Example 10(ii), case c with i=0 at r=5") {
    const auto rr =
        conjugate_reduce(spec_of({"a1", "a2", "a1", "a1a2", "a1"}), {ReduceCase::Kind::C, 0});
    CHECK(rr.conjugator == parse_word("a1 T a2 T", 3));
    // reduced = A_3 T (A_4 A_2) T^-1 with A_4 A_2 = a1a2*a2 = a1 = A_3
    CHECK(rr.reduced == parse_word("a1 T a1 T^-1", 3));
    CHECK(rr.s == 2);
}

TEST_CASE("case preconditions are reported") {
    CHECK_THROWS_AS(
        conjugate_reduce(spec_of({"a1", "a2", "a2"}), {ReduceCase::Kind::B, 0}),
        CaseNotApplicableError);
    CHECK_THROWS_WITH_AS(
        conjugate_reduce(spec_of({"a1", "a2", "a2"}), {ReduceCase::Kind::B, 0}),
        doctest::Contains("A3*A1"), CaseNotApplicableError);
    CHECK_THROWS_AS(conjugate_reduce(spec_of({"a1", "a1"}), {ReduceCase::Kind::A, 0}),
                    SpecInvalidError);
    CHECK_THROWS_AS(
        conjugate_reduce(spec_of({"a1", "a2", "a1"}), {ReduceCase::Kind::C, 0}),
        SpecInvalidError); // r=3 has no valid i
}

TEST_CASE("auto dispatch tries b, then c by increasing i, then a") {
    const auto rb = conjugate_reduce_auto(spec_of({"a1", "a2", "a1"}));
    CHECK(rb.applied.kind == ReduceCase::Kind::B);

    const auto rc = conjugate_reduce_auto(spec_of({"a1", "a2", "a1", "a1a2", "a1"}));
    CHECK(rc.applied.kind == ReduceCase::Kind::C);
    CHECK(rc.applied.i == 0);

    const auto ra = conjugate_reduce_auto(spec_of({"a2", "a1a2", "a1"}));
    CHECK(ra.applied.kind == ReduceCase::Kind::A);

    // A_3 A_1 = a2a1, neither 1 nor A_2: no case applies
    CHECK_THROWS_AS(conjugate_reduce_auto(spec_of({"a1", "a1", "a2"})),
                    CaseNotApplicableError);
    // b applies to constant involution lists: A_3 A_1 = 1
    CHECK(conjugate_reduce_auto(spec_of({"a1", "a1", "a1"})).applied.kind ==
          ReduceCase::Kind::B);
}

TEST_CASE("rho(w^-1 x w) = rho(reduced) across the corpus, and Theorem 11") {
    RepContext<LaurentPoly> ctx(3);
    const auto corpus = claims_detail::prop9_corpus();
    REQUIRE(corpus.size() >= 12);
    int leading = 0;
    for (const auto& entry : corpus) {
        const ReduceResult rr = conjugate_reduce(entry.spec, entry.rc);
        const Word x = claims_detail::e1_word_unchecked(entry.spec);
        const Word conj = free_reduce(rr.conjugator.inverse() * x * rr.conjugator);
        INFO(entry.label);
        REQUIRE(ctx.word_matrix(conj) == ctx.word_matrix(rr.reduced));
        REQUIRE_FALSE(ctx.word_matrix(rr.reduced).is_identity());
        if (entry.spec.form == SpecForm::LeadingT) ++leading;
    }
    CHECK(leading >= 3); // the mirror form is genuinely exercised
}
