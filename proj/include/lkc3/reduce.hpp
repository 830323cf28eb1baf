#pragma once

// Proposition 9: conjugation reduction of E1 words. For r >= 3 odd and an
// A-list satisfying case (a), (b) or (c), produces the conjugator w and the
// shorter word `reduced` with rho(w^-1 x w) = rho(reduced); rho-wise, reduced
// is (A T)^s T^{-s} for a single alpha element A.
//
// LeadingT specs reduce through the exact conjugacy
// x_leading = T^{1-r} x_trailing T^{r-1}, sharing the trailing case's result.

#include <string>
#include <vector>

#include "words.hpp"

namespace lkc3 {

struct ReduceCase {
    enum class Kind { A, B, C };
    Kind kind = Kind::A;
    int i = 0; // case (c) only

    std::string name() const {
        switch (kind) {
            case Kind::A: return "a";
            case Kind::B: return "b";
            case Kind::C: return "c(i=" + std::to_string(i) + ")";
        }
        return "?";
    }
};

struct ReduceResult {
    ReduceCase applied;
    Word conjugator;   // w
    Word reduced;      // rho(w^-1 x w) = rho(reduced)
    AlphaElem repeated; // the A of (A T)^s T^{-s}
    long s = 0;
};

namespace detail {

inline AlphaElem block(const E1Spec& spec, int index_1_based) {
    return spec.blocks[static_cast<size_t>(index_1_based - 1)];
}

inline void require(bool ok, const std::string& equation) {
    if (!ok) throw CaseNotApplicableError("condition violated: " + equation);
}

inline std::string eq_text(const E1Spec& spec, int hi, int lo, const std::string& rhs) {
    return "A" + std::to_string(hi) + "*A" + std::to_string(lo) + " = " + rhs +
           " (A" + std::to_string(hi) + "=" + alpha_name(block(spec, hi)) +
           ", A" + std::to_string(lo) + "=" + alpha_name(block(spec, lo)) + ")";
}

inline Word conjugator_prefix(const E1Spec& spec, int blocks) {
    // A_1 T A_2 T ... A_blocks T
    Word w;
    w.n = 3;
    for (int j = 1; j <= blocks; ++j) {
        for (const Gen& g : alpha_word(block(spec, j)).letters) w.letters.push_back(g);
        w.letters.push_back(gen_t());
    }
    return w;
}

inline void append_t_run(Word& w, long s) {
    const Gen t = s >= 0 ? gen_t() : gen_t_inv();
    for (long r = 0; r < (s >= 0 ? s : -s); ++r) w.letters.push_back(t);
}

} // namespace detail

inline ReduceResult conjugate_reduce(const E1Spec& spec, const ReduceCase& rc) {
    const int r = spec.r;
    if (r < 3 || r % 2 == 0)
        throw SpecInvalidError("Proposition 9 requires odd r >= 3, got r=" + std::to_string(r));
    detail::check_blocks(r, spec.blocks);

    ReduceResult out;
    out.applied = rc;

    using detail::block;
    switch (rc.kind) {
        case ReduceCase::Kind::A: {
            // A_r A_1 = A_2 = ... = A_{r-1}
            const AlphaElem prod = alpha_mul(block(spec, r), block(spec, 1));
            detail::require(prod == block(spec, 2),
                            detail::eq_text(spec, r, 1, "A2=" + alpha_name(block(spec, 2))));
            for (int j = 3; j <= r - 1; ++j)
                detail::require(block(spec, j) == block(spec, 2),
                                "A" + std::to_string(j) + " = A2");
            out.conjugator = detail::conjugator_prefix(spec, 1); // A_1 T
            Word red;
            red.n = 3;
            for (int j = 2; j <= r - 1; ++j) {
                for (const Gen& g : alpha_word(block(spec, j)).letters) red.letters.push_back(g);
                red.letters.push_back(gen_t());
            }
            for (const Gen& g : alpha_word(prod).letters) red.letters.push_back(g);
            detail::append_t_run(red, -r + 2);
            out.reduced = red;
            out.repeated = prod;
            out.s = r - 1;
            break;
        }
        case ReduceCase::Kind::B: {
            // A_r A_1 = A_{r-1} A_2 = ... = A_{(r+3)/2} A_{(r-1)/2} = 1
            for (int j = 0; j <= (r - 3) / 2; ++j) {
                const int hi = r - j, lo = 1 + j;
                detail::require(alpha_is_identity(alpha_mul(block(spec, hi), block(spec, lo))),
                                detail::eq_text(spec, hi, lo, "1"));
            }
            out.conjugator = detail::conjugator_prefix(spec, (r - 1) / 2);
            out.reduced = alpha_word(block(spec, (r + 1) / 2));
            out.repeated = block(spec, (r + 1) / 2);
            out.s = 1;
            break;
        }
        case ReduceCase::Kind::C: {
            const int i = rc.i;
            if (i < 0 || i > (r - 5) / 2)
                throw SpecInvalidError("case (c) requires i in {0..(r-5)/2}");
            for (int j = 0; j <= i; ++j) {
                const int hi = r - j, lo = 1 + j;
                detail::require(alpha_is_identity(alpha_mul(block(spec, hi), block(spec, lo))),
                                detail::eq_text(spec, hi, lo, "1"));
            }
            const AlphaElem prod = alpha_mul(block(spec, r - i - 1), block(spec, i + 2));
            for (int j = i + 3; j <= r - i - 2; ++j)
                detail::require(block(spec, j) == prod,
                                detail::eq_text(spec, r - i - 1, i + 2,
                                                "A" + std::to_string(j) + "=" +
                                                    alpha_name(block(spec, j))));
            out.conjugator = detail::conjugator_prefix(spec, i + 2);
            Word red;
            red.n = 3;
            for (int j = i + 3; j <= r - i - 2; ++j) {
                for (const Gen& g : alpha_word(block(spec, j)).letters) red.letters.push_back(g);
                red.letters.push_back(gen_t());
            }
            for (const Gen& g : alpha_word(prod).letters) red.letters.push_back(g);
            detail::append_t_run(red, -r + 2 * i + 4);
            out.reduced = red;
            out.repeated = prod;
            out.s = r - 2 * i - 3;
            break;
        }
    }

    if (spec.form == SpecForm::LeadingT) {
        // x_leading = T^{1-r} x_trailing T^{r-1}, so prepend T^{1-r} to w.
        Word w;
        w.n = 3;
        detail::append_t_run(w, 1 - r);
        w.letters.insert(w.letters.end(), out.conjugator.letters.begin(),
                         out.conjugator.letters.end());
        out.conjugator = w;
    }
    return out;
}

// Detect-and-dispatch: (b) first, then (c) with increasing i, then (a).
inline ReduceResult conjugate_reduce_auto(const E1Spec& spec) {
    std::vector<ReduceCase> candidates;
    candidates.push_back({ReduceCase::Kind::B, 0});
    for (int i = 0; i <= (spec.r - 5) / 2; ++i) candidates.push_back({ReduceCase::Kind::C, i});
    candidates.push_back({ReduceCase::Kind::A, 0});
    std::string last;
    for (const ReduceCase& rc : candidates) {
        try {
            return conjugate_reduce(spec, rc);
        } catch (const CaseNotApplicableError& e) {
            last = e.what();
        }
    }
    throw CaseNotApplicableError("no Proposition 9 case applies; last failure: " + last);
}

} // namespace lkc3
