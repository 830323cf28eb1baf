#pragma once

// C_n as conjugating automorphisms of the free group F_n — the independent
// nontriviality oracle for unfaithfulness witnesses.
//
// The paper never writes the Artin formulas, so the convention is selected
// by procedure: among {conjugate-by-lower, conjugate-by-upper} Artin variants
// x {left-to-right, right-to-left} composition, the seven relation families
// pin exactly one candidate per composition order (the two survivors are
// mirror images under word reversal). Left-to-right composition is fixed
// project-wide by the matrix side, which selects:
//   sigma_i: x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,
// composed leftmost letter first.

#include <array>
#include <string>
#include <vector>

#include "rep.hpp"
#include "words.hpp"

namespace lkc3 {

// Reduced word in the free generators; letters are +i / -i for x_i^{+-1}.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<int> letters) {
        for (int l : letters) push(l);
    }
    static FreeWord generator(int i, bool inverse = false) {
        FreeWord w;
        w.push(inverse ? -i : i);
        return w;
    }

    const std::vector<int>& letters() const { return ls_; }
    bool empty() const { return ls_.empty(); }
    std::size_t size() const { return ls_.size(); }

    void push(int l) {
        if (l == 0) throw Error("free letter 0");
        if (!ls_.empty() && ls_.back() == -l)
            ls_.pop_back();
        else
            ls_.push_back(l);
    }

    void append(const FreeWord& w) {
        for (int l : w.ls_) push(l);
    }

    FreeWord inverse() const {
        FreeWord r;
        for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.push(-*it);
        return r;
    }

    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.ls_ == b.ls_; }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }

    std::string to_string() const {
        if (ls_.empty()) return "1";
        std::string out;
        std::size_t i = 0;
        while (i < ls_.size()) {
            std::size_t j = i;
            while (j < ls_.size() && ls_[j] == ls_[i]) ++j;
            if (!out.empty()) out += " ";
            const int l = ls_[i];
            out += "x" + std::to_string(l > 0 ? l : -l);
            long e = static_cast<long>(j - i);
            if (l < 0) e = -e;
            if (e != 1) out += "^" + std::to_string(e);
            i = j;
        }
        return out;
    }

private:
    std::vector<int> ls_;
};

struct Automorphism {
    int n = 0;
    std::vector<FreeWord> images; // image of x_1 .. x_n

    static Automorphism identity(int n) {
        Automorphism a;
        a.n = n;
        for (int i = 1; i <= n; ++i) a.images.push_back(FreeWord::generator(i));
        return a;
    }

    const FreeWord& image(int i) const { return images[static_cast<size_t>(i - 1)]; }

    FreeWord apply(const FreeWord& w) const {
        FreeWord out;
        for (int l : w.letters()) {
            const FreeWord& im = image(l > 0 ? l : -l);
            if (l > 0) out.append(im);
            else out.append(im.inverse());
        }
        return out;
    }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.n == b.n && a.images == b.images;
    }
};

inline bool is_identity(const Automorphism& a) {
    for (int i = 1; i <= a.n; ++i)
        if (a.image(i) != FreeWord::generator(i)) return false;
    return true;
}

// "a then b": x -> b(a(x)).
inline Automorphism compose_left_to_right(const Automorphism& a, const Automorphism& b) {
    Automorphism r;
    r.n = a.n;
    r.images.reserve(static_cast<size_t>(a.n));
    for (int i = 1; i <= a.n; ++i) r.images.push_back(b.apply(a.image(i)));
    return r;
}

enum class ArtinVariant { ConjugateLower, ConjugateUpper };
enum class CompositionOrder { LeftToRight, RightToLeft };

struct ArtinConvention {
    ArtinVariant variant = ArtinVariant::ConjugateLower;
    CompositionOrder order = CompositionOrder::LeftToRight;

    std::string describe() const {
        std::string s = variant == ArtinVariant::ConjugateLower
                            ? "sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i"
                            : "sigma_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1} x_i x_{i+1}^-1";
        s += order == CompositionOrder::LeftToRight ? "; composed left-to-right"
                                                    : "; composed right-to-left";
        return s;
    }
};

inline ArtinConvention selected_convention() {
    return {ArtinVariant::ConjugateLower, CompositionOrder::LeftToRight};
}

inline Automorphism artin_generator(const Gen& g, int n,
                                    ArtinVariant variant = ArtinVariant::ConjugateLower) {
    if (g.is_t()) {
        if (n != 3) throw TOnlyForN3Error("T generator requires n=3");
        // handled by expansion in apply_word; composing here keeps callers simple
        throw Error("artin_generator: expand T before calling");
    }
    const int i = g.index;
    if (i < 1 || i >= n)
        throw IndexError("generator index " + std::to_string(i) +
                         " out of range for n=" + std::to_string(n));
    Automorphism a = Automorphism::identity(n);
    auto x = [](int k) { return FreeWord::generator(k); };
    switch (g.kind) {
        case GenKind::Alpha:
            a.images[static_cast<size_t>(i - 1)] = x(i + 1);
            a.images[static_cast<size_t>(i)] = x(i);
            break;
        case GenKind::Sigma:
            if (variant == ArtinVariant::ConjugateLower) {
                FreeWord im;
                im.append(x(i));
                im.append(x(i + 1));
                im.append(x(i).inverse());
                a.images[static_cast<size_t>(i - 1)] = im;
                a.images[static_cast<size_t>(i)] = x(i);
            } else {
                FreeWord im;
                im.append(x(i + 1));
                im.append(x(i));
                im.append(x(i + 1).inverse());
                a.images[static_cast<size_t>(i - 1)] = x(i + 1);
                a.images[static_cast<size_t>(i)] = im;
            }
            break;
        case GenKind::SigmaInv:
            if (variant == ArtinVariant::ConjugateLower) {
                // inverse of (x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i)
                FreeWord im;
                im.append(x(i + 1).inverse());
                im.append(x(i));
                im.append(x(i + 1));
                a.images[static_cast<size_t>(i - 1)] = x(i + 1);
                a.images[static_cast<size_t>(i)] = im;
            } else {
                FreeWord im;
                im.append(x(i).inverse());
                im.append(x(i + 1));
                im.append(x(i));
                a.images[static_cast<size_t>(i - 1)] = im;
                a.images[static_cast<size_t>(i)] = x(i);
            }
            break;
        default:
            throw Error("unreachable");
    }
    return a;
}

// Composition of generator automorphisms in word order (T expands first).
inline Automorphism apply_word(const Word& w, int n,
                               ArtinConvention conv = selected_convention()) {
    Word base = w;
    if (w.n == 3) base = expand_t(w);
    if (base.n != n) throw IndexError("word ambient n does not match");
    Automorphism acc = Automorphism::identity(n);
    for (const Gen& g : base.letters) {
        const Automorphism ga = artin_generator(g, n, conv.variant);
        acc = conv.order == CompositionOrder::LeftToRight
                  ? compose_left_to_right(acc, ga)
                  : compose_left_to_right(ga, acc);
    }
    return acc;
}

// Structural check of the conjugating shape f^-1 x_j f: peel matched
// inverse pairs off both ends down to a single positive generator.
inline bool has_conjugating_shape(const FreeWord& w) {
    const auto& ls = w.letters();
    if (ls.size() % 2 == 0) return false;
    std::size_t lo = 0, hi = ls.size() - 1;
    while (lo < hi) {
        if (ls[lo] != -ls[hi]) return false;
        ++lo;
        --hi;
    }
    return ls[lo] > 0;
}

inline bool is_conjugating(const Automorphism& a) {
    std::vector<bool> seen(static_cast<size_t>(a.n), false);
    for (int i = 1; i <= a.n; ++i) {
        const FreeWord& im = a.image(i);
        if (!has_conjugating_shape(im)) return false;
        // middle letter determines the permutation
        const int mid = im.letters()[im.letters().size() / 2];
        if (mid <= 0 || mid > a.n || seen[static_cast<size_t>(mid - 1)]) return false;
        seen[static_cast<size_t>(mid - 1)] = true;
    }
    return true;
}

// Relation families checked as automorphism identities.
inline RelationReport verify_relations_free(int n, ArtinConvention conv = selected_convention()) {
    RelationReport report;
    report.n = n;
    for (const auto& [family, pair] : relation_instances(n)) {
        const bool ok = apply_word(pair.first, n, conv) == apply_word(pair.second, n, conv);
        report.add(family, pair.first.to_string() + " = " + pair.second.to_string(), ok);
    }
    return report;
}

struct ConventionCandidateResult {
    ArtinConvention convention;
    bool passes = false;
};

// Runs all four candidates against the full relation set on F_n.
inline std::vector<ConventionCandidateResult> convention_selection(int n = 4) {
    std::vector<ConventionCandidateResult> out;
    for (ArtinVariant v : {ArtinVariant::ConjugateLower, ArtinVariant::ConjugateUpper})
        for (CompositionOrder o : {CompositionOrder::LeftToRight, CompositionOrder::RightToLeft}) {
            ArtinConvention c{v, o};
            out.push_back({c, verify_relations_free(n, c).all_hold});
        }
    return out;
}

} // namespace lkc3
