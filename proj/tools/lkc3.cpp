// lkc3 — evaluate, verify, and search the extension of the Lawrence-Krammer
// representation on the conjugating-automorphism group C_n (n=3 centered).
//
// Subcommands: eval, verify, search, reduce, qset, alpha-words.
// Exit codes: 0 success, 1 hard FAIL verdicts / runtime failures, 2 usage.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lkc3/claims.hpp"
#include "lkc3/search.hpp"

using json = nlohmann::ordered_json;
using namespace lkc3;

namespace {

// --q accepts `a/b` rationals (exact mode), decimal literals (exact), and
// `re+imi` complex literals (float mode).
ScalarMode parse_q(const std::string& text) {
    if (text.find('i') != std::string::npos) {
        std::string s = text;
        s.pop_back(); // trailing 'i' marks the imaginary part
        double re = 0.0, im = 0.0;
        // split at the last +/- that is not an exponent sign or leading sign
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        try {
            if (split == std::string::npos) {
                im = s.empty() || s == "+" ? 1.0 : s == "-" ? -1.0 : std::stod(s);
            } else {
                re = std::stod(s.substr(0, split));
                const std::string imtxt = s.substr(split);
                im = imtxt == "+" ? 1.0 : imtxt == "-" ? -1.0 : std::stod(imtxt);
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError("--q", "cannot parse complex literal '" + text + "'");
        }
        return ScalarMode::complex_mode(Complex(re, im));
    }
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            const Integer num(text.substr(0, slash));
            const Integer den(text.substr(slash + 1));
            return ScalarMode::rational(make_rational(num, den));
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t frac = text.size() - dot - 1;
            Integer den(1);
            for (std::size_t k = 0; k < frac; ++k) den *= 10;
            return ScalarMode::rational(make_rational(Integer(digits), den));
        }
        return ScalarMode::rational(make_rational(Integer(text), Integer(1)));
    } catch (const ZeroQError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--q", "cannot parse rational literal '" + text + "'");
    }
}

json matrix_json(const std::string& rendered) {
    json rows = json::array();
    std::size_t start = 0;
    while (start < rendered.size()) {
        auto nl = rendered.find('\n', start);
        if (nl == std::string::npos) nl = rendered.size();
        std::string row = rendered.substr(start, nl - start);
        // strip brackets, split on ", "
        if (!row.empty() && row.front() == '[') row.erase(row.begin());
        if (!row.empty() && row.back() == ']') row.pop_back();
        json cells = json::array();
        std::size_t p = 0;
        while (p <= row.size()) {
            auto comma = row.find(", ", p);
            if (comma == std::string::npos) {
                cells.push_back(row.substr(p));
                break;
            }
            cells.push_back(row.substr(p, comma - p));
            p = comma + 2;
        }
        rows.push_back(cells);
        start = nl + 1;
    }
    return rows;
}

template <class S>
int eval_in_mode(const Word& word, int n, const ScalarMode& mode, bool with_det,
                 bool as_json) {
    RepContext<S> ctx(n, mode);
    const RingMatrix<S> m = ctx.word_matrix(word);
    if (as_json) {
        json out;
        out["n"] = n;
        out["mode"] = mode.describe();
        out["word"] = word.to_string();
        out["matrix"] = matrix_json(m.to_string());
        if (with_det) {
            out["det"] = ScalarOps<S>::str(mat_det(m));
            if (n == 3)
                out["predicted_det"] = predicted_det(word).to_string();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << m.to_string() << "\n";
        if (with_det) {
            std::cout << "det           = " << ScalarOps<S>::str(mat_det(m)) << "\n";
            if (n == 3)
                std::cout << "predicted det = " << predicted_det(word).to_string() << "\n";
        }
    }
    return 0;
}

int cmd_eval(const std::string& word_text, int n, const std::optional<std::string>& q_text,
             bool with_det, bool as_json, const std::string& alphabet) {
    const bool allow_t = alphabet != "sigma" && n == 3;
    const Word word = parse_word(word_text, n, allow_t);
    const ScalarMode mode = q_text ? parse_q(*q_text) : ScalarMode::symbolic();
    switch (mode.kind) {
        case ScalarMode::Kind::Symbolic:
            return eval_in_mode<LaurentPoly>(word, n, mode, with_det, as_json);
        case ScalarMode::Kind::Rational:
            return eval_in_mode<Rational>(word, n, mode, with_det, as_json);
        case ScalarMode::Kind::Complex:
            return eval_in_mode<Complex>(word, n, mode, with_det, as_json);
    }
    return 1;
}

int cmd_verify(bool relations, bool claims, std::vector<int> ns, bool as_json) {
    if (!relations && !claims) relations = claims = true;
    if (ns.empty()) ns = {3, 4};
    bool hard_fail = false;
    json out;

    if (relations) {
        json jrels = json::array();
        for (int n : ns) {
            RepContext<LaurentPoly> ctx(n);
            const RelationReport mat_rep = verify_relations(ctx);
            const RelationReport free_rep = verify_relations_free(n);
            hard_fail = hard_fail || !mat_rep.all_hold || !free_rep.all_hold;
            if (as_json) {
                for (const auto& side :
                     {std::make_pair(std::string("matrix"), &mat_rep),
                      std::make_pair(std::string("automorphism"), &free_rep)}) {
                    for (const auto& c : side.second->checks) {
                        jrels.push_back({{"n", n},
                                         {"side", side.first},
                                         {"family", c.family},
                                         {"instance", c.instance},
                                         {"holds", c.holds}});
                    }
                }
            } else {
                std::cout << "relations n=" << n << " (matrix side): "
                          << (mat_rep.all_hold ? "all hold" : "FAILURES") << " ("
                          << mat_rep.checks.size() << " instances)\n";
                for (const auto& c : mat_rep.checks)
                    if (!c.holds) std::cout << "  FAIL " << c.family << ": " << c.instance << "\n";
                std::cout << "relations n=" << n << " (free-group side): "
                          << (free_rep.all_hold ? "all hold" : "FAILURES") << " ("
                          << free_rep.checks.size() << " instances)\n";
                for (const auto& c : free_rep.checks)
                    if (!c.holds) std::cout << "  FAIL " << c.family << ": " << c.instance << "\n";
            }
        }
        if (as_json) out["relations"] = jrels;
    }

    if (claims) {
        const auto verdicts = verify_paper_claims();
        hard_fail = hard_fail || any_hard_failure(verdicts);
        if (as_json) {
            json jclaims = json::array();
            for (const auto& v : verdicts)
                jclaims.push_back({{"claim_id", v.id},
                                   {"paper_locus", v.locus},
                                   {"status", v.status_text()},
                                   {"evidence", v.evidence}});
            if (!relations) {
                out = jclaims; // the verdict report schema is a bare array
            } else {
                out["claims"] = jclaims;
            }
        } else {
            for (const auto& v : verdicts) {
                std::cout << v.status_text();
                for (std::size_t pad = v.status_text().size(); pad < 18; ++pad) std::cout << ' ';
                std::cout << v.id << "\n";
                std::cout << "                  " << v.evidence << "\n";
            }
        }
    }

    if (as_json) std::cout << out.dump(2) << "\n";
    return hard_fail ? 1 : 0;
}

int cmd_search(const SearchConfig& cfg, bool as_json) {
    const SearchResult res = kernel_search(cfg);
    if (as_json) {
        json out;
        out["mode"] = cfg.mode.describe();
        json hits = json::array();
        for (const auto& f : res.findings)
            hits.push_back({{"word", f.word.to_string()},
                            {"nontrivial", f.nontrivial},
                            {"matrix", matrix_json(f.matrix_text)}});
        out["findings"] = hits;
        out["nodes"] = res.stats.nodes;
        out["tested"] = res.stats.tested;
        out["det_skipped"] = res.stats.det_skipped;
        out["memo_hits"] = res.stats.memo_hits;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& f : res.findings)
            std::cout << "kernel element: " << f.word.to_string()
                      << (f.nontrivial ? "  [nontrivial]" : "  [trivial in C_3]") << "\n";
        std::cout << "searched " << res.stats.nodes << " candidates (" << res.stats.tested
                  << " identity tests, " << res.stats.det_skipped << " det-filtered, "
                  << res.stats.memo_hits << " memo hits) in " << res.stats.seconds
                  << " s; findings: " << res.findings.size() << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& blocks_text, const std::string& form_text,
               const std::string& case_text, int case_i, bool as_json) {
    E1Spec spec;
    spec.form = form_text == "leading" ? SpecForm::LeadingT : SpecForm::TrailingT;
    std::size_t p = 0;
    while (p <= blocks_text.size()) {
        auto comma = blocks_text.find(',', p);
        const std::string name =
            blocks_text.substr(p, comma == std::string::npos ? comma : comma - p);
        const auto elem = alpha_from_name(name);
        if (!elem || alpha_is_identity(*elem))
            throw SpecInvalidError("block '" + name +
                                   "' is not one of a1, a2, a1a2, a2a1, a1a2a1");
        spec.blocks.push_back(*elem);
        if (comma == std::string::npos) break;
        p = comma + 1;
    }
    spec.r = static_cast<int>(spec.blocks.size());

    ReduceResult rr;
    if (case_text == "auto") {
        rr = conjugate_reduce_auto(spec);
    } else {
        ReduceCase rc;
        rc.kind = case_text == "a"   ? ReduceCase::Kind::A
                  : case_text == "b" ? ReduceCase::Kind::B
                                     : ReduceCase::Kind::C;
        rc.i = case_i;
        rr = conjugate_reduce(spec, rc);
    }

    RepContext<LaurentPoly> ctx(3);
    const Word x = claims_detail::e1_word_unchecked(spec);
    const Word conj = free_reduce(rr.conjugator.inverse() * x * rr.conjugator);
    const bool verified = ctx.word_matrix(conj) == ctx.word_matrix(rr.reduced);

    if (as_json) {
        json out;
        out["case"] = rr.applied.name();
        out["x"] = x.to_string();
        out["conjugator"] = rr.conjugator.to_string();
        out["reduced"] = rr.reduced.to_string();
        out["repeated_block"] = alpha_name(rr.repeated);
        out["s"] = rr.s;
        out["rho_equal"] = verified;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "case:       " << rr.applied.name() << "\n";
        std::cout << "x:          " << x.to_string() << "\n";
        std::cout << "w:          " << rr.conjugator.to_string() << "\n";
        std::cout << "reduced:    " << rr.reduced.to_string() << "\n";
        std::cout << "rho-check:  rho(w^-1 x w) "
                  << (verified ? "= rho(reduced), verified symbolically"
                               : "!= rho(reduced)  <-- UNEXPECTED")
                  << "\n";
    }
    return verified ? 0 : 1;
}

int cmd_qset(const std::string& set_name, long k, const std::string& q_text, double tol) {
    QSetId set;
    if (set_name == "P" || set_name == "p") set = qset_p(k);
    else if (set_name == "R" || set_name == "r") set = qset_r(k);
    else if (set_name == "S" || set_name == "s") set = qset_s(k);
    else throw SpecInvalidError("set must be one of P, R, S");
    const ScalarMode mode = parse_q(q_text);
    const Complex q = mode.q_as_complex();
    const bool member = qset_member(set, q, tol);
    std::cout << "q = " << ScalarOps<Complex>::str(q) << (member ? " is in " : " is not in ")
              << set.name() << "  (tolerance " << tol << ")\n";
    return 0;
}

int cmd_alpha_words(bool as_json) {
    RepContext<LaurentPoly> ctx(3);
    const AlphaEnumeration en = enumerate_alpha_subgroup();
    json out = json::array();
    for (AlphaElem a : en.elements) {
        const Word w = alpha_word(a);
        const auto m = ctx.word_matrix(w);
        if (as_json) {
            out.push_back({{"word", alpha_name(a)},
                           {"identity", alpha_is_identity(a)},
                           {"matrix", matrix_json(m.to_string())}});
        } else {
            std::cout << alpha_name(a) << (alpha_is_identity(a) ? " (identity)" : "") << ":\n"
                      << m.to_string() << "\n";
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with the Lawrence-Krammer extension on C_n"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a word to a matrix");
    std::string eval_word;
    int eval_n = 3;
    std::optional<std::string> eval_q;
    bool eval_det = false, eval_json = false;
    std::string eval_alphabet = "t";
    eval->add_option("word", eval_word, "word in the grammar, e.g. \"a2 T a2 T^-1\"");
    eval->add_option("-n,--n", eval_n, "ambient n (default 3)");
    eval->add_option("--q", eval_q, "specialize q: a/b rational or re+imi complex");
    eval->add_flag("--symbolic", "evaluate over Z[q^±1] (default)");
    eval->add_flag("--det", eval_det, "also print determinant and predicted determinant");
    eval->add_flag("--json", eval_json, "JSON output");
    eval->add_option("--alphabet", eval_alphabet, "t (allow T tokens, n=3) or sigma")
        ->check(CLI::IsMember({"t", "sigma"}));

    // verify
    auto* verify = app.add_subcommand("verify", "check relations and paper claims");
    bool v_relations = false, v_claims = false, v_json = false;
    std::vector<int> v_ns;
    verify->add_flag("--relations", v_relations, "verify the seven relation families");
    verify->add_flag("--claims", v_claims, "run the paper-claim registry");
    verify->add_option("-n,--n", v_ns, "n values for the relation suite (default 3 4)");
    verify->add_flag("--json", v_json, "JSON output");

    // search
    auto* search = app.add_subcommand("search", "search for kernel elements");
    std::string s_family = "freewords";
    std::optional<std::string> s_q;
    int s_max_r = 3, s_threads = 1;
    long s_max_exp = 3, s_budget = 10'000'000;
    std::size_t s_max_len = 8;
    double s_tol = 1e-9;
    bool s_json = false;
    search->add_option("--family", s_family, "e1 | e | freewords")
        ->check(CLI::IsMember({"e1", "e", "freewords"}));
    search->add_option("--q", s_q, "specialize q (rational or complex); omit for symbolic");
    search->add_flag("--symbolic", "search over Z[q^±1] (default)");
    search->add_option("--max-r", s_max_r, "max r for the E/E1 families");
    search->add_option("--max-exp", s_max_exp, "max |s_i| for the E family");
    search->add_option("--max-len", s_max_len, "max letters for the freewords family");
    search->add_option("--tol", s_tol, "identity tolerance in complex mode");
    search->add_option("--budget", s_budget, "node budget");
    search->add_option("--threads", s_threads, "worker threads");
    search->add_flag("--json", s_json, "JSON output");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Proposition 9 conjugation reduction");
    std::string r_blocks, r_form = "trailing", r_case = "auto";
    int r_i = 0;
    bool r_json = false;
    reduce->add_option("blocks", r_blocks, "comma list of A_i, e.g. a1,a2,a1")->required();
    reduce->add_option("--form", r_form, "trailing | leading")
        ->check(CLI::IsMember({"trailing", "leading"}));
    reduce->add_option("--case", r_case, "auto | a | b | c")
        ->check(CLI::IsMember({"auto", "a", "b", "c"}));
    reduce->add_option("--i", r_i, "i for case c");
    reduce->add_flag("--json", r_json, "JSON output");

    // qset
    auto* qset = app.add_subcommand("qset", "q-set membership (P_k, R_k, S_k)");
    std::string q_set, q_value;
    long q_k = 2;
    double q_tol = 1e-9;
    qset->add_option("--set", q_set, "P | R | S")->required();
    qset->add_option("--k", q_k, "index k");
    qset->add_option("--q", q_value, "the q to test")->required();
    qset->add_option("--tol", q_tol, "tolerance");

    // alpha-words
    auto* aw = app.add_subcommand("alpha-words", "enumerate the alpha subgroup");
    bool aw_json = false;
    aw->add_flag("--json", aw_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*eval) return cmd_eval(eval_word, eval_n, eval_q, eval_det, eval_json, eval_alphabet);
        if (*verify) return cmd_verify(v_relations, v_claims, v_ns, v_json);
        if (*search) {
            SearchConfig cfg;
            cfg.family = s_family == "e1" ? SearchFamily::E1
                         : s_family == "e" ? SearchFamily::E
                                           : SearchFamily::FreeWords;
            cfg.mode = s_q ? parse_q(*s_q) : ScalarMode::symbolic();
            cfg.max_r = s_max_r;
            cfg.max_abs_exponent = s_max_exp;
            cfg.max_length = s_max_len;
            cfg.tolerance = s_tol;
            cfg.node_budget = s_budget;
            cfg.threads = s_threads;
            return cmd_search(cfg, s_json);
        }
        if (*reduce) return cmd_reduce(r_blocks, r_form, r_case, r_i, r_json);
        if (*qset) return cmd_qset(q_set, q_k, q_value, q_tol);
        if (*aw) return cmd_alpha_words(aw_json);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpecInvalidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroQError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
