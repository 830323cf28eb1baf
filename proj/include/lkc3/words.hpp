#pragma once

// Words over the generators of C_n and the T/alpha alphabet of C_3.
// Letters are stored unrolled (no exponent compression) so free reduction
// and letter statistics are single-pass; the parser accepts exponents.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lkc3 {

enum class GenKind { Sigma, SigmaInv, Alpha, T, TInv };

struct Gen {
    GenKind kind;
    int index; // >= 1 for Sigma/SigmaInv/Alpha; 0 for T/TInv

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }

    bool is_alpha() const { return kind == GenKind::Alpha; }
    bool is_sigma() const { return kind == GenKind::Sigma || kind == GenKind::SigmaInv; }
    bool is_t() const { return kind == GenKind::T || kind == GenKind::TInv; }

    Gen inverse() const {
        switch (kind) {
            case GenKind::Sigma: return {GenKind::SigmaInv, index};
            case GenKind::SigmaInv: return {GenKind::Sigma, index};
            case GenKind::Alpha: return {GenKind::Alpha, index};
            case GenKind::T: return {GenKind::TInv, 0};
            case GenKind::TInv: return {GenKind::T, 0};
        }
        return *this;
    }

    std::string token() const {
        switch (kind) {
            case GenKind::Sigma: return "s" + std::to_string(index);
            case GenKind::SigmaInv: return "s" + std::to_string(index) + "^-1";
            case GenKind::Alpha: return "a" + std::to_string(index);
            case GenKind::T: return "T";
            case GenKind::TInv: return "T^-1";
        }
        return "?";
    }
};

inline Gen sigma(int i) { return {GenKind::Sigma, i}; }
inline Gen sigma_inv(int i) { return {GenKind::SigmaInv, i}; }
inline Gen alpha(int i) { return {GenKind::Alpha, i}; }
inline Gen gen_t() { return {GenKind::T, 0}; }
inline Gen gen_t_inv() { return {GenKind::TInv, 0}; }

struct Word {
    int n = 3; // ambient C_n
    std::vector<Gen> letters;

    Word() = default;
    Word(int ambient, std::vector<Gen> ls) : n(ambient), letters(std::move(ls)) { validate(); }

    void validate() const {
        for (const Gen& g : letters) {
            if (g.is_t()) {
                if (n != 3) throw TOnlyForN3Error("T generator requires ambient n=3");
            } else if (g.index < 1 || g.index >= n) {
                throw IndexError("generator index " + std::to_string(g.index) +
                                 " out of range for n=" + std::to_string(n));
            }
        }
    }

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word inverse() const {
        Word w;
        w.n = n;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back(it->inverse());
        return w;
    }

    friend Word operator*(const Word& a, const Word& b) {
        if (a.n != b.n) throw IndexError("concatenating words with different ambient n");
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.n == b.n && a.letters == b.letters;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    // Run-length token form, round-trips through parse_word.
    std::string to_string() const {
        if (letters.empty()) return "";
        std::string out;
        std::size_t i = 0;
        while (i < letters.size()) {
            std::size_t j = i;
            while (j < letters.size() && letters[j] == letters[i]) ++j;
            const std::size_t run = j - i;
            if (!out.empty()) out += " ";
            const Gen& g = letters[i];
            long expo = static_cast<long>(run);
            std::string base;
            switch (g.kind) {
                case GenKind::Sigma: base = "s" + std::to_string(g.index); break;
                case GenKind::SigmaInv: base = "s" + std::to_string(g.index); expo = -expo; break;
                case GenKind::Alpha: base = "a" + std::to_string(g.index); break;
                case GenKind::T: base = "T"; break;
                case GenKind::TInv: base = "T"; expo = -expo; break;
            }
            out += base;
            if (expo != 1) out += "^" + std::to_string(expo);
            i = j;
        }
        return out;
    }
};

// Sum of absolute powers of the generators; with unrolled letters this is
// just the letter count.
inline std::size_t word_length(const Word& w) { return w.letters.size(); }

inline bool cancels(const Gen& a, const Gen& b) {
    return b == a.inverse();
}

// Removes adjacent s_i s_i^-1, s_i^-1 s_i, a_i a_i, T T^-1, T^-1 T until none
// remain. No other relations are applied.
inline Word free_reduce(const Word& w) {
    Word r;
    r.n = w.n;
    for (const Gen& g : w.letters) {
        if (!r.letters.empty() && cancels(r.letters.back(), g))
            r.letters.pop_back();
        else
            r.letters.push_back(g);
    }
    return r;
}

// T = sigma2 alpha2 alpha1; T^-1 = alpha1 alpha2 sigma2^-1.
inline Word expand_t(const Word& w) {
    if (w.n != 3) throw TOnlyForN3Error("expand_t requires ambient n=3");
    Word r;
    r.n = 3;
    for (const Gen& g : w.letters) {
        switch (g.kind) {
            case GenKind::T:
                r.letters.push_back(sigma(2));
                r.letters.push_back(alpha(2));
                r.letters.push_back(alpha(1));
                break;
            case GenKind::TInv:
                r.letters.push_back(alpha(1));
                r.letters.push_back(alpha(2));
                r.letters.push_back(sigma_inv(2));
                break;
            default:
                r.letters.push_back(g);
        }
    }
    return r;
}

// ---- parser ----------------------------------------------------------------
// Grammar: whitespace-separated tokens `s<k>`, `a<k>`, `T`, optional suffix
// `^<int>` (negative allowed for s and T only), e.g. "a2 T a2 T a2 T a2 T T^-4".

inline Word parse_word(const std::string& text, int n, bool allow_t = true) {
    if (n < 2) throw IndexError("ambient n must be >= 2");
    Word w;
    w.n = n;
    std::size_t i = 0;
    const std::size_t len = text.size();
    while (i < len) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        const std::size_t tok_start = i;
        std::size_t j = i;
        while (j < len && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const std::string tok = text.substr(i, j - i);
        i = j;

        std::string base = tok;
        long expo = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            const std::string es = tok.substr(caret + 1);
            if (es.empty() || (es == "-"))
                throw SyntaxError("missing exponent after '^' in '" + tok + "'", tok_start);
            std::size_t pos = 0;
            try {
                expo = std::stol(es, &pos);
            } catch (const std::exception&) {
                throw SyntaxError("bad exponent in '" + tok + "'", tok_start);
            }
            if (pos != es.size())
                throw SyntaxError("bad exponent in '" + tok + "'", tok_start);
        }

        Gen g{};
        if (base == "T") {
            if (!allow_t)
                throw SyntaxError("token 'T' not allowed with --alphabet sigma", tok_start);
            if (n != 3)
                throw IndexError("token 'T' requires n=3");
            g = gen_t();
        } else if (base.size() >= 2 && (base[0] == 's' || base[0] == 'a')) {
            const std::string digits = base.substr(1);
            if (!std::all_of(digits.begin(), digits.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw SyntaxError("bad generator token '" + tok + "'", tok_start);
            const int idx = std::stoi(digits);
            if (idx < 1 || idx >= n)
                throw IndexError("generator index " + std::to_string(idx) +
                                 " out of range for n=" + std::to_string(n));
            if (base[0] == 's') {
                g = sigma(idx);
            } else {
                if (expo < 0)
                    throw SyntaxError("negative exponent on involution 'a" +
                                      std::to_string(idx) + "'", tok_start);
                g = alpha(idx);
            }
        } else {
            throw SyntaxError("unrecognized token '" + tok + "'", tok_start);
        }

        Gen letter = g;
        long count = expo;
        if (expo < 0) {
            letter = g.inverse();
            count = -expo;
        }
        for (long r = 0; r < count; ++r) w.letters.push_back(letter);
    }
    return w;
}

// ---- letter statistics ------------------------------------------------------

struct GenCounts {
    long a1 = 0;            // alpha_1 occurrences
    long a2 = 0;            // alpha_2 occurrences
    long alpha_total = 0;   // all alpha letters
    long t = 0;             // T occurrences
    long i = 0;             // T^-1 occurrences
    long sigma_count = 0;   // sigma^{+-1} letters
    long sigma_exp_sum = 0; // signed sigma exponent sum
};

inline GenCounts gen_counts(const Word& w) {
    GenCounts c;
    for (const Gen& g : w.letters) {
        switch (g.kind) {
            case GenKind::Alpha:
                ++c.alpha_total;
                if (g.index == 1) ++c.a1;
                if (g.index == 2) ++c.a2;
                break;
            case GenKind::T: ++c.t; break;
            case GenKind::TInv: ++c.i; break;
            case GenKind::Sigma: ++c.sigma_count; ++c.sigma_exp_sum; break;
            case GenKind::SigmaInv: ++c.sigma_count; --c.sigma_exp_sum; break;
        }
    }
    return c;
}

// ---- the alpha subgroup -----------------------------------------------------
// The image of S_3 inside C_3: identity plus the five nontrivial words of
// Proposition 4. Elements are indexed 0..5 in the fixed order below and
// multiplied through their basis permutations (e_i -> e_perm[i], composed
// left-to-right like the matrix side).

struct AlphaElem {
    int id = 0;

    friend bool operator==(AlphaElem a, AlphaElem b) { return a.id == b.id; }
    friend bool operator!=(AlphaElem a, AlphaElem b) { return !(a == b); }
};

namespace alpha_tables {

inline const std::array<std::array<int, 3>, 6>& perms() {
    // 0: e, 1: a1, 2: a2, 3: a1a2, 4: a2a1, 5: a1a2a1
    static const std::array<std::array<int, 3>, 6> p = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    return p;
}

inline const std::array<std::vector<Gen>, 6>& letters() {
    static const std::array<std::vector<Gen>, 6> w = {{
        {},
        {alpha(1)},
        {alpha(2)},
        {alpha(1), alpha(2)},
        {alpha(2), alpha(1)},
        {alpha(1), alpha(2), alpha(1)},
    }};
    return w;
}

inline int id_of_perm(const std::array<int, 3>& perm) {
    const auto& ps = perms();
    for (int k = 0; k < 6; ++k)
        if (ps[static_cast<size_t>(k)] == perm) return k;
    throw Error("not a basis permutation");
}

} // namespace alpha_tables

inline AlphaElem alpha_identity() { return {0}; }
inline bool alpha_is_identity(AlphaElem a) { return a.id == 0; }

// Product a*b, a applied first (matching rho(uv) = rho(u) rho(v)).
inline AlphaElem alpha_mul(AlphaElem a, AlphaElem b) {
    const auto& ps = alpha_tables::perms();
    std::array<int, 3> comp{};
    for (int i = 0; i < 3; ++i)
        comp[static_cast<size_t>(i)] =
            ps[static_cast<size_t>(b.id)][static_cast<size_t>(ps[static_cast<size_t>(a.id)][static_cast<size_t>(i)])];
    return {alpha_tables::id_of_perm(comp)};
}

inline std::size_t alpha_length(AlphaElem a) {
    return alpha_tables::letters()[static_cast<size_t>(a.id)].size();
}

inline Word alpha_word(AlphaElem a) {
    return Word(3, alpha_tables::letters()[static_cast<size_t>(a.id)]);
}

inline std::string alpha_name(AlphaElem a) {
    static const char* names[6] = {"e", "a1", "a2", "a1a2", "a2a1", "a1a2a1"};
    return names[a.id];
}

inline std::optional<AlphaElem> alpha_from_name(const std::string& s) {
    for (int k = 0; k < 6; ++k)
        if (alpha_name({k}) == s) return AlphaElem{k};
    return std::nullopt;
}

// Reduce an arbitrary alpha-only letter sequence inside the subgroup.
inline AlphaElem alpha_of_letters(const std::vector<Gen>& ls) {
    AlphaElem acc = alpha_identity();
    for (const Gen& g : ls) {
        if (!g.is_alpha() || g.index > 2)
            throw IndexError("alpha-subgroup reduction expects a1/a2 letters");
        acc = alpha_mul(acc, {g.index});
    }
    return acc;
}

struct AlphaEnumeration {
    std::vector<AlphaElem> elements; // deterministic order, identity first
    AlphaElem identity;
};

// Exhaustive closure of {a1, a2} under multiplication, deduplicated by the
// image permutation. Returns all 6 elements; Proposition 4 lists only
// the 5 nontrivial ones.
inline AlphaEnumeration enumerate_alpha_subgroup() {
    std::vector<AlphaElem> found = {alpha_identity()};
    auto contains = [&](AlphaElem x) {
        return std::any_of(found.begin(), found.end(), [&](AlphaElem y) { return y == x; });
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < found.size(); ++i) {
            for (int g = 1; g <= 2; ++g) {
                AlphaElem next = alpha_mul(found[i], {g});
                if (!contains(next)) {
                    found.push_back(next);
                    grew = true;
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), [](AlphaElem a, AlphaElem b) {
        if (alpha_length(a) != alpha_length(b)) return alpha_length(a) < alpha_length(b);
        return a.id < b.id;
    });
    return {found, alpha_identity()};
}

// ---- E / E1 word families ---------------------------------------------------

enum class SpecForm { TrailingT, LeadingT };

// x = A_1 T A_2 T ... A_{r-1} T A_r T^{1-r}   (TrailingT)
// x = T^{1-r} A_1 T A_2 ... T A_{r-1} T A_r   (LeadingT)
struct E1Spec {
    int r = 1;
    std::vector<AlphaElem> blocks; // r nontrivial alpha elements
    SpecForm form = SpecForm::TrailingT;
};

// General-exponent variant with sum(s) = 0.
struct ESpec {
    int r = 1;
    std::vector<AlphaElem> blocks;
    std::vector<long> exponents;
    SpecForm form = SpecForm::TrailingT;
};

namespace detail {

inline void append_alpha(Word& w, AlphaElem a) {
    for (const Gen& g : alpha_tables::letters()[static_cast<size_t>(a.id)])
        w.letters.push_back(g);
}

inline void append_t_power(Word& w, long s) {
    const Gen g = s >= 0 ? gen_t() : gen_t_inv();
    for (long k = 0; k < (s >= 0 ? s : -s); ++k) w.letters.push_back(g);
}

inline void check_blocks(int r, const std::vector<AlphaElem>& blocks) {
    if (r < 1) throw SpecInvalidError("spec requires r >= 1");
    if (static_cast<int>(blocks.size()) != r)
        throw SpecInvalidError("spec carries " + std::to_string(blocks.size()) +
                               " blocks for r=" + std::to_string(r));
    for (AlphaElem a : blocks)
        if (alpha_is_identity(a))
            throw SpecInvalidError("A_i must be a nontrivial alpha word");
}

inline long total_alpha_length(const std::vector<AlphaElem>& blocks) {
    long sum = 0;
    for (AlphaElem a : blocks) sum += static_cast<long>(alpha_length(a));
    return sum;
}

} // namespace detail

inline Word build_from_spec(const E1Spec& spec) {
    detail::check_blocks(spec.r, spec.blocks);
    if (detail::total_alpha_length(spec.blocks) % 2 != 0)
        throw SpecInvalidError("sum of length(A_i) must be even");
    Word w;
    w.n = 3;
    if (spec.form == SpecForm::LeadingT) detail::append_t_power(w, 1 - spec.r);
    for (int i = 0; i < spec.r; ++i) {
        detail::append_alpha(w, spec.blocks[static_cast<size_t>(i)]);
        if (i + 1 < spec.r) w.letters.push_back(gen_t());
    }
    if (spec.form == SpecForm::TrailingT) detail::append_t_power(w, 1 - spec.r);
    return w;
}

inline Word build_from_spec(const ESpec& spec) {
    detail::check_blocks(spec.r, spec.blocks);
    if (static_cast<int>(spec.exponents.size()) != spec.r)
        throw SpecInvalidError("spec carries " + std::to_string(spec.exponents.size()) +
                               " exponents for r=" + std::to_string(spec.r));
    long esum = 0;
    for (long s : spec.exponents) esum += s;
    if (esum != 0)
        throw SpecInvalidError("sum of s_i must be 0, got " + std::to_string(esum));
    if (detail::total_alpha_length(spec.blocks) % 2 != 0)
        throw SpecInvalidError("sum of length(A_i) must be even");
    Word w;
    w.n = 3;
    for (int i = 0; i < spec.r; ++i) {
        if (spec.form == SpecForm::TrailingT) {
            detail::append_alpha(w, spec.blocks[static_cast<size_t>(i)]);
            detail::append_t_power(w, spec.exponents[static_cast<size_t>(i)]);
        } else {
            detail::append_t_power(w, spec.exponents[static_cast<size_t>(i)]);
            detail::append_alpha(w, spec.blocks[static_cast<size_t>(i)]);
        }
    }
    return w;
}

// ---- Theorem 7 classifier ---------------------------------------------------

enum class KernelForm { I, II, III, IV };

struct KernelClassification {
    KernelForm form = KernelForm::I;
    bool eligible = false;
    std::string reason;
    long t_exponent_sum = 0;
    long alpha_length_sum = 0;
};

inline const char* kernel_form_name(KernelForm f) {
    switch (f) {
        case KernelForm::I: return "i";
        case KernelForm::II: return "ii";
        case KernelForm::III: return "iii";
        case KernelForm::IV: return "iv";
    }
    return "?";
}

// Assigns the Theorem 7 case to a freely reduced word in the T/alpha
// alphabet. Eligible means form iii/iv with sum(s_i) = 0 and even total
// alpha length — the necessary kernel conditions when q^{6k} != 1.
inline KernelClassification classify_kernel_candidate(const Word& w) {
    for (const Gen& g : w.letters)
        if (g.is_sigma())
            throw IndexError("classifier expects a word in the T/alpha alphabet");

    const GenCounts c = gen_counts(w);
    KernelClassification out;
    out.t_exponent_sum = c.t - c.i;
    out.alpha_length_sum = c.alpha_total;

    const bool has_alpha = c.alpha_total > 0;
    const bool has_t = (c.t + c.i) > 0;

    if (!has_alpha) {
        out.form = KernelForm::II;
        if (w.empty()) {
            out.reason = "empty word: the trivial element, not a kernel witness";
        } else {
            out.reason = "T^k has det (-q)^{3k} != 1";
        }
        out.eligible = false;
        return out;
    }
    if (!has_t) {
        out.form = KernelForm::I;
        out.eligible = false;
        out.reason = "pure alpha word: maps to a nonidentity permutation matrix";
        return out;
    }
    out.form = w.letters.front().is_alpha() ? KernelForm::III : KernelForm::IV;
    if (out.t_exponent_sum != 0) {
        out.reason = "sum s_i = " + std::to_string(out.t_exponent_sum) +
                     " != 0 forces det != 1";
        out.eligible = false;
    } else if (out.alpha_length_sum % 2 != 0) {
        out.reason = "odd total alpha length forces det = -1";
        out.eligible = false;
    } else {
        out.reason = "satisfies the Theorem 7 necessary conditions";
        out.eligible = true;
    }
    return out;
}

} // namespace lkc3
