#pragma once

// Kernel search over the E1/E word families and over free words in the
// T/alpha alphabet. Candidates are det-prefiltered (Theorem 7 determinant
// formula), scalar-equivalent words share one identity test through a memo
// keyed on (mod-2 T-core, T-exponent sum) — rho(T^2) is central, so equal
// keys mean equal images — and every hit is double-checked against the
// free-group oracle and annotated nontrivial/trivial.
//
// Determinism contract: findings are sorted by (length, lexicographic
// letters); the threaded path partitions the top-level enumeration and
// produces the same list as the single-threaded one.

#include <atomic>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freegroup.hpp"
#include "rep.hpp"

namespace lkc3 {

enum class SearchFamily { E1, E, FreeWords };

struct SearchConfig {
    ScalarMode mode = ScalarMode::symbolic();
    SearchFamily family = SearchFamily::FreeWords;
    int max_r = 3;
    long max_abs_exponent = 3;
    std::size_t max_length = 8;
    double tolerance = 1e-9;
    long node_budget = 10'000'000;
    int threads = 1;

    void validate() const {
        if (max_r < 1 || max_abs_exponent < 1 || max_length < 1)
            throw SpecInvalidError("search bounds must be positive");
        if (tolerance <= 0 || tolerance > 1e-4)
            throw SpecInvalidError("tolerance must lie in (0, 1e-4]");
        if (node_budget < 1) throw SpecInvalidError("node budget must be positive");
        if (threads < 1) throw SpecInvalidError("thread count must be positive");
    }
};

struct SearchFinding {
    Word word;
    std::string matrix_text;
    bool nontrivial = false;
};

struct SearchStats {
    long nodes = 0;
    long tested = 0;
    long det_skipped = 0;
    long memo_hits = 0;
    double seconds = 0.0;
};

struct SearchResult {
    std::vector<SearchFinding> findings;
    SearchStats stats;
};

namespace detail {

inline bool word_less(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                        b.letters.begin(), b.letters.end());
}

// (mod-2 T-core token string, T-exponent sum): words with equal keys have
// identical rho images in every mode.
inline std::pair<std::string, long> scalar_class_key(const Word& w) {
    const Word red = free_reduce(w);
    std::string core;
    long tsum = 0;
    long run = 0;
    auto flush = [&]() {
        if (run == 0) return;
        tsum += run;
        if (((run % 2) + 2) % 2) core += "T ";
        run = 0;
    };
    for (const Gen& g : red.letters) {
        if (g.kind == GenKind::T) { ++run; continue; }
        if (g.kind == GenKind::TInv) { --run; continue; }
        flush();
        core += g.token() + " ";
    }
    flush();
    return {core, tsum};
}

template <class S>
bool matrix_is_identity(const RingMatrix<S>& m, double /*tol*/) {
    return m.is_identity();
}

inline bool matrix_is_identity(const RingMatrix<Complex>& m, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const Complex want = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(m.at(i, j) - want) > tol) return false;
        }
    return true;
}

template <class S>
class SearchEngine {
public:
    explicit SearchEngine(const SearchConfig& cfg) : cfg_(cfg), ctx_(3, cfg.mode) {
        const long span = std::max<long>(cfg_.max_abs_exponent, cfg_.max_r);
        t_pow_.resize(static_cast<size_t>(2 * span + 1));
        t_offset_ = span;
        t_pow_[static_cast<size_t>(t_offset_)] = ctx_.identity();
        for (long s = 1; s <= span; ++s) {
            t_pow_[static_cast<size_t>(t_offset_ + s)] =
                t_pow_[static_cast<size_t>(t_offset_ + s - 1)] * ctx_.generator_matrix(gen_t());
            t_pow_[static_cast<size_t>(t_offset_ - s)] =
                t_pow_[static_cast<size_t>(t_offset_ - s + 1)] * ctx_.generator_matrix(gen_t_inv());
        }
        for (int id = 0; id < 6; ++id)
            alpha_m_[static_cast<size_t>(id)] = ctx_.word_matrix(alpha_word({id}));
    }

    SearchResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<Partition> parts = make_partitions();
        const int nthreads = std::max(1, std::min<int>(cfg_.threads, static_cast<int>(parts.size())));
        std::vector<Worker> workers(static_cast<size_t>(nthreads));

        if (nthreads == 1) {
            for (const Partition& p : parts) run_partition(p, workers[0]);
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::size_t> next{0};
            for (int t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t]() {
                    for (;;) {
                        const std::size_t idx = next.fetch_add(1);
                        if (idx >= parts.size() || budget_blown_) break;
                        try {
                            run_partition(parts[idx], workers[static_cast<size_t>(t)]);
                        } catch (const BudgetExceededError&) {
                            budget_blown_ = true;
                            break;
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        if (budget_blown_)
            throw BudgetExceededError("kernel search exceeded the node budget of " +
                                      std::to_string(cfg_.node_budget));

        SearchResult result;
        for (Worker& w : workers) {
            result.stats.nodes += w.stats.nodes;
            result.stats.tested += w.stats.tested;
            result.stats.det_skipped += w.stats.det_skipped;
            result.stats.memo_hits += w.stats.memo_hits;
            result.findings.insert(result.findings.end(), w.findings.begin(), w.findings.end());
        }
        std::sort(result.findings.begin(), result.findings.end(),
                  [](const SearchFinding& a, const SearchFinding& b) {
                      return word_less(a.word, b.word);
                  });
        result.findings.erase(
            std::unique(result.findings.begin(), result.findings.end(),
                        [](const SearchFinding& a, const SearchFinding& b) {
                            return a.word == b.word;
                        }),
            result.findings.end());
        result.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }

private:
    struct Worker {
        SearchStats stats;
        std::vector<SearchFinding> findings;
        std::unordered_map<std::string, bool> memo; // key -> is identity
    };

    struct Partition {
        int first = 0;                       // FreeWords: letter; E/E1: first block id
        SpecForm form = SpecForm::TrailingT; // families only
        int r = 1;
    };

    SearchConfig cfg_;
    RepContext<S> ctx_;
    std::vector<RingMatrix<S>> t_pow_;
    long t_offset_ = 0;
    std::array<RingMatrix<S>, 6> alpha_m_;
    std::atomic<long> global_nodes_{0};
    std::atomic<bool> budget_blown_{false};

    const RingMatrix<S>& t_pow(long s) const {
        return t_pow_[static_cast<size_t>(t_offset_ + s)];
    }

    std::vector<Partition> make_partitions() const {
        std::vector<Partition> parts;
        if (cfg_.family == SearchFamily::FreeWords) {
            for (int f = 0; f < 4; ++f) parts.push_back({f, SpecForm::TrailingT, 0});
        } else {
            for (SpecForm form : {SpecForm::TrailingT, SpecForm::LeadingT})
                for (int r = 1; r <= cfg_.max_r; ++r)
                    for (int a1 = 1; a1 <= 5; ++a1) parts.push_back({a1, form, r});
        }
        return parts;
    }

    void count_node(Worker& w) {
        ++w.stats.nodes;
        if (global_nodes_.fetch_add(1) + 1 > cfg_.node_budget)
            throw BudgetExceededError("node budget exceeded");
    }

    bool det_filter_passes(const Word& w) const {
        const LaurentPoly pd = predicted_det(w);
        switch (cfg_.mode.kind) {
            case ScalarMode::Kind::Symbolic:
                return pd.is_one();
            case ScalarMode::Kind::Rational:
                return pd.eval(cfg_.mode.q_rational) == 1;
            case ScalarMode::Kind::Complex:
                return std::abs(pd.eval(cfg_.mode.q_complex) - Complex(1.0, 0.0)) <=
                       cfg_.tolerance;
        }
        return false;
    }

    void consider(Worker& w, const Word& word, const RingMatrix<S>& m) {
        count_node(w);
        if (word.empty()) return;
        if (!det_filter_passes(word)) {
            ++w.stats.det_skipped;
            return;
        }
        const auto [core, tsum] = scalar_class_key(word);
        const std::string key = core + "|" + std::to_string(tsum);
        bool identity;
        if (auto it = w.memo.find(key); it != w.memo.end()) {
            ++w.stats.memo_hits;
            identity = it->second;
        } else {
            ++w.stats.tested;
            identity = matrix_is_identity(m, cfg_.tolerance);
            w.memo.emplace(key, identity);
        }
        if (!identity) return;
        SearchFinding f;
        f.word = free_reduce(word);
        f.matrix_text = m.to_string();
        f.nontrivial = !is_identity(apply_word(f.word, 3));
        w.findings.push_back(std::move(f));
    }

    void run_partition(const Partition& p, Worker& w) {
        if (cfg_.family == SearchFamily::FreeWords) {
            run_freewords(p, w);
        } else if (cfg_.family == SearchFamily::E1) {
            std::vector<AlphaElem> blocks = {{p.first}};
            Word prefix_word;
            prefix_word.n = 3;
            detail_append_alpha(prefix_word, {p.first});
            dfs_e1(w, p, blocks, prefix_word, alpha_m_[static_cast<size_t>(p.first)]);
        } else {
            std::vector<AlphaElem> blocks = {{p.first}};
            std::vector<long> exps;
            if (p.form == SpecForm::TrailingT) {
                Word prefix_word;
                prefix_word.n = 3;
                detail_append_alpha(prefix_word, {p.first});
                dfs_e_trailing(w, p, blocks, exps, prefix_word,
                               alpha_m_[static_cast<size_t>(p.first)]);
            } else {
                dfs_e_leading(w, p, blocks, exps);
            }
        }
    }

    static void detail_append_alpha(Word& w, AlphaElem a) {
        for (const Gen& g : alpha_word(a).letters) w.letters.push_back(g);
    }

    static void detail_append_t(Word& w, long s) {
        const Gen t = s >= 0 ? gen_t() : gen_t_inv();
        for (long k = 0; k < (s >= 0 ? s : -s); ++k) w.letters.push_back(t);
    }

    // ---- FreeWords ---------------------------------------------------------
    static const std::vector<Gen>& freeword_alphabet() {
        static const std::vector<Gen> a = {alpha(1), alpha(2), gen_t(), gen_t_inv()};
        return a;
    }

    void run_freewords(const Partition& p, Worker& w) {
        Word word;
        word.n = 3;
        const Gen first = freeword_alphabet()[static_cast<size_t>(p.first)];
        word.letters.push_back(first);
        dfs_freewords(w, word, ctx_.generator_matrix(first));
    }

    void dfs_freewords(Worker& w, Word& word, const RingMatrix<S>& m) {
        consider(w, word, m);
        if (word.letters.size() >= cfg_.max_length) return;
        for (const Gen& g : freeword_alphabet()) {
            if (cancels(word.letters.back(), g)) continue;
            word.letters.push_back(g);
            const RingMatrix<S> next = m * ctx_.generator_matrix(g);
            dfs_freewords(w, word, next);
            word.letters.pop_back();
        }
    }

    // ---- E1: A_1 T ... A_r T^{1-r} and T^{1-r} A_1 T ... A_r --------------
    // prefix covers A_1 T A_2 T ... A_b (blocks joined by single T).
    void dfs_e1(Worker& w, const Partition& p, std::vector<AlphaElem>& blocks,
                const Word& prefix_word, const RingMatrix<S>& prefix) {
        const int b = static_cast<int>(blocks.size());
        if (b == p.r) {
            if (total_alpha_length(blocks) % 2 != 0) return;
            if (p.form == SpecForm::TrailingT) {
                Word word = prefix_word;
                detail_append_t(word, 1 - p.r);
                consider(w, word, prefix * t_pow(1 - p.r));
            } else {
                Word word;
                word.n = 3;
                detail_append_t(word, 1 - p.r);
                word.letters.insert(word.letters.end(), prefix_word.letters.begin(),
                                    prefix_word.letters.end());
                consider(w, word, t_pow(1 - p.r) * prefix);
            }
            return;
        }
        for (int id = 1; id <= 5; ++id) {
            blocks.push_back({id});
            Word word = prefix_word;
            word.letters.push_back(gen_t());
            detail_append_alpha(word, {id});
            const RingMatrix<S> next =
                prefix * t_pow(1) * alpha_m_[static_cast<size_t>(id)];
            dfs_e1(w, p, blocks, word, next);
            blocks.pop_back();
        }
    }

    // ---- E trailing: A_1 T^{s_1} A_2 T^{s_2} ... A_r T^{s_r} ---------------
    // prefix covers A_1 T^{s_1} ... A_b; exps holds s_1..s_{b-1}.
    void dfs_e_trailing(Worker& w, const Partition& p, std::vector<AlphaElem>& blocks,
                        std::vector<long>& exps, const Word& prefix_word,
                        const RingMatrix<S>& prefix) {
        const int b = static_cast<int>(blocks.size());
        if (b == p.r) {
            if (total_alpha_length(blocks) % 2 != 0) return;
            long sum = 0;
            for (long s : exps) sum += s;
            const long last = -sum;
            if (last == 0 || std::abs(last) > cfg_.max_abs_exponent) return;
            Word word = prefix_word;
            detail_append_t(word, last);
            consider(w, word, prefix * t_pow(last));
            return;
        }
        for (long s = -cfg_.max_abs_exponent; s <= cfg_.max_abs_exponent; ++s) {
            if (s == 0) continue;
            exps.push_back(s);
            const RingMatrix<S> with_t = prefix * t_pow(s);
            Word word_t = prefix_word;
            detail_append_t(word_t, s);
            for (int id = 1; id <= 5; ++id) {
                blocks.push_back({id});
                Word word = word_t;
                detail_append_alpha(word, {id});
                const RingMatrix<S> next = with_t * alpha_m_[static_cast<size_t>(id)];
                dfs_e_trailing(w, p, blocks, exps, word, next);
                blocks.pop_back();
            }
            exps.pop_back();
        }
    }

    // ---- E leading: T^{s_1} A_1 T^{s_2} A_2 ... T^{s_r} A_r ----------------
    // Exponent i pairs with block i; the balancing exponent pairs with A_r.
    // prefix covers the complete pairs 1..b-1; blocks.back() is the pending
    // block awaiting its exponent.
    void dfs_e_leading(Worker& w, const Partition& p, std::vector<AlphaElem>& blocks,
                       std::vector<long>& exps) {
        Word empty;
        empty.n = 3;
        dfs_e_leading_impl(w, p, blocks, exps, empty, ctx_.identity());
    }

    void dfs_e_leading_impl(Worker& w, const Partition& p, std::vector<AlphaElem>& blocks,
                            std::vector<long>& exps, const Word& prefix_word,
                            const RingMatrix<S>& prefix) {
        const int b = static_cast<int>(blocks.size());
        const AlphaElem pending = blocks.back();
        if (b == p.r) {
            if (total_alpha_length(blocks) % 2 != 0) return;
            long sum = 0;
            for (long s : exps) sum += s;
            const long last = -sum;
            if (last == 0 || std::abs(last) > cfg_.max_abs_exponent) return;
            Word word = prefix_word;
            detail_append_t(word, last);
            detail_append_alpha(word, pending);
            consider(w, word,
                     prefix * t_pow(last) * alpha_m_[static_cast<size_t>(pending.id)]);
            return;
        }
        for (long s = -cfg_.max_abs_exponent; s <= cfg_.max_abs_exponent; ++s) {
            if (s == 0) continue;
            exps.push_back(s);
            Word word = prefix_word;
            detail_append_t(word, s);
            detail_append_alpha(word, pending);
            const RingMatrix<S> mid =
                prefix * t_pow(s) * alpha_m_[static_cast<size_t>(pending.id)];
            for (int id = 1; id <= 5; ++id) {
                blocks.push_back({id});
                dfs_e_leading_impl(w, p, blocks, exps, word, mid);
                blocks.pop_back();
            }
            exps.pop_back();
        }
    }
};

} // namespace detail

inline SearchResult kernel_search(const SearchConfig& cfg) {
    cfg.validate();
    switch (cfg.mode.kind) {
        case ScalarMode::Kind::Symbolic: {
            detail::SearchEngine<LaurentPoly> e(cfg);
            return e.run();
        }
        case ScalarMode::Kind::Rational: {
            detail::SearchEngine<Rational> e(cfg);
            return e.run();
        }
        case ScalarMode::Kind::Complex: {
            detail::SearchEngine<Complex> e(cfg);
            return e.run();
        }
    }
    throw Error("unreachable");
}

} // namespace lkc3
