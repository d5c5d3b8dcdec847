#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hsa/areas.hpp"
#include "hsa/elimination.hpp"
#include "hsa/hall.hpp"
#include "hsa/identities.hpp"
#include "hsa/json_io.hpp"
#include "hsa/pbw.hpp"
#include "hsa/products.hpp"
#include "hsa/random_elements.hpp"
#include "hsa/sig_kernels.hpp"
#include "hsa/signature.hpp"

namespace {

using namespace hsa;

struct Globals {
    unsigned alphabet = 2;
    std::string order = "lyndon";
    unsigned max_degree = 6;
    unsigned long long seed = 0;
    bool json_out = false;
};

void add_globals(CLI::App* cmd, Globals& g) {
    cmd->add_option("--alphabet", g.alphabet, "alphabet size d")
        ->check(CLI::Range(1u, 255u))
        ->capture_default_str();
    cmd->add_option("--order", g.order, "hall order")
        ->check(CLI::IsMember({"lyndon", "degree-lex"}))
        ->capture_default_str();
    cmd->add_option("--max-degree", g.max_degree, "hall set degree bound")->capture_default_str();
    cmd->add_option("--seed", g.seed, "rng seed")->capture_default_str();
    cmd->add_flag("--json", g.json_out, "emit JSON instead of text");
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// inline JSON, a JSON file, or a plain word
FreeElement parse_element_arg(const std::string& s) {
    if (!s.empty() && s[0] == '[') return free_element_from_json(json::parse(s));
    std::ifstream in(s);
    if (in) {
        json j;
        in >> j;
        return free_element_from_json(j);
    }
    return FreeElement::word(Word::parse(s));
}

HallSet make_hall(const Globals& g, unsigned max_degree) {
    return HallSet::generate(g.alphabet, parse_hall_order(g.order), max_degree);
}

void check_letters_in_alphabet(const Word& w, unsigned d) {
    if (w.max_letter() > d)
        throw CLI::ValidationError("word", "letter outside the alphabet {1.." + std::to_string(d) + "}");
}

std::string hall_monomial_text(const HallMonomial& m) {
    if (m.factors.empty()) return "e";
    std::string out;
    for (const auto& [t, k] : m.factors) {
        if (!out.empty()) out += ' ';
        out += t.foliage().str();
        if (k != 1) out += '^' + std::to_string(k);
    }
    return out;
}

std::string area_monomial_text(const AreaMonomial& m) {
    if (m.factors.empty()) return "e";
    std::string out;
    for (const auto& t : m.factors) {
        if (!out.empty()) out += ' ';
        out += t.str();
    }
    return out;
}

int run_hall(const Globals& g) {
    const HallSet H = make_hall(g, g.max_degree);
    if (g.json_out) {
        json out = json::array();
        for (unsigned n = 1; n <= g.max_degree; ++n)
            for (const Tree& t : H.trees_of_degree(n))
                out.push_back({{"degree", n}, {"foliage", t.foliage().str()}, {"tree", t.str()}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (unsigned n = 1; n <= g.max_degree; ++n)
        for (const Tree& t : H.trees_of_degree(n))
            std::cout << n << '\t' << t.foliage().str() << '\t' << t.str() << "\n";
    return 0;
}

int run_factorize(const Globals& g, const std::string& word_text, bool degree_set) {
    const Word w = Word::parse(word_text);
    check_letters_in_alphabet(w, g.alphabet);
    const unsigned bound = degree_set ? g.max_degree : static_cast<unsigned>(w.length());
    const HallSet H = make_hall(g, bound);
    const auto factors = H.factorize(w);
    if (g.json_out) {
        json out = json::array();
        for (const auto& [f, k] : factors)
            out.push_back({{"word", f.str()},
                           {"power", k},
                           {"tree", H.tree_of_hall_word(f).str()}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& [f, k] : factors) std::cout << f.str() << '\t' << k << "\n";
    return 0;
}

int run_pbw(const Globals& g, const std::string& word_text, bool degree_set) {
    const Word w = Word::parse(word_text);
    check_letters_in_alphabet(w, g.alphabet);
    const unsigned bound = degree_set ? g.max_degree : static_cast<unsigned>(w.length());
    const HallSet H = make_hall(g, bound);
    const FreeElement p = pbw_element(w, H);
    if (g.json_out)
        std::cout << free_element_to_json(p).dump(2) << "\n";
    else
        std::cout << p.str() << "\n";
    return 0;
}

int run_dual(const Globals& g, const std::string& word_text, const std::string& strategy,
             bool degree_set) {
    const Word w = Word::parse(word_text);
    check_letters_in_alphabet(w, g.alphabet);
    const unsigned bound = degree_set ? g.max_degree : static_cast<unsigned>(w.length());
    const HallSet H = make_hall(g, bound);
    FreeElement s;
    if (strategy.empty()) {
        s = dual_basis_element(w, H);
    } else {
        const Tree* t = H.find_word(w);
        if (t == nullptr)
            throw CLI::ValidationError("--strategy", "strategies apply to hall words only");
        s = dual_of_hall_word(*t, H, parse_dual_strategy(strategy));
    }
    if (g.json_out)
        std::cout << free_element_to_json(s).dump(2) << "\n";
    else
        std::cout << s.str() << "\n";
    return 0;
}

int run_expand(const Globals& g, const std::string& elem_text, bool degree_set, bool check) {
    const FreeElement f = parse_element_arg(elem_text);
    const unsigned bound = degree_set ? g.max_degree : static_cast<unsigned>(std::max<std::size_t>(f.degree(), 1));
    const HallSet H = make_hall(g, bound);
    const HallPoly p = expand_in_dual_basis(f, H);
    bool ok = true;
    if (check) ok = (eval_hall_poly(p, H) == f);
    if (g.json_out) {
        json out = hall_poly_to_json(p);
        if (check) out = json{{"expansion", std::move(out)}, {"check", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [m, c] : p.terms)
            std::cout << rat_str_frac(c) << '\t' << hall_monomial_text(m) << "\n";
        if (check) std::cout << "check: " << (ok ? "ok" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

int run_rewrite_areas(const Globals& g, const std::string& word_text, const std::string& area_text,
                      const std::vector<std::string>& factor_texts, bool check) {
    AreaPoly p;
    FreeElement reference;
    if (!word_text.empty()) {
        const Word w = Word::parse(word_text);
        check_letters_in_alphabet(w, g.alphabet);
        p = word_to_area_poly(w);
        reference = FreeElement::word(w);
    } else {
        if (area_text.empty() || factor_texts.empty())
            throw CLI::ValidationError("rewrite-areas",
                                       "need a word, or --area plus at least one --factor");
        const Tree A = Tree::parse(area_text);
        AreaMonomial M;
        for (const auto& s : factor_texts) M.factors.push_back(Tree::parse(s));
        p = rewrite_area_of_monomial(A, M);
        FreeElement rhs = FreeElement::unit();
        for (const auto& t : M.factors) rhs = shuffle(rhs, eval_tree(t, TreeProduct::area));
        reference = area(eval_tree(A, TreeProduct::area), rhs);
    }
    bool ok = true;
    if (check) ok = (eval_area_poly(p) == reference);
    if (g.json_out) {
        json out = area_poly_to_json(p);
        if (check) out = json{{"rewrite", std::move(out)}, {"check", ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [m, c] : p.terms)
            std::cout << rat_str_frac(c) << '\t' << area_monomial_text(m) << "\n";
        if (check) std::cout << "check: " << (ok ? "ok" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

json element_list_json(const std::vector<FreeElement>& args) {
    json out = json::array();
    for (const auto& a : args) out.push_back(free_element_to_json(a));
    return out;
}

int run_verify(const Globals& g, const std::string& identity, const std::vector<unsigned>& letters,
               unsigned random_count, unsigned degree) {
    std::vector<IdentityName> names;
    if (identity == "all")
        names = all_identities();
    else
        names.push_back(parse_identity(identity));

    if (!letters.empty()) {
        if (names.size() != 1)
            throw CLI::ValidationError("--letters", "letter tuples check one identity at a time");
        const IdentityName name = names[0];
        std::vector<FreeElement> args;
        for (unsigned l : letters) {
            if (l < 1 || l > g.alphabet)
                throw CLI::ValidationError("--letters", "letter outside the alphabet");
            args.push_back(FreeElement::letter(static_cast<Letter>(l)));
        }
        const int arity = identity_arity(name);
        if (arity > 0 && args.size() != static_cast<std::size_t>(arity))
            throw CLI::ValidationError("--letters", std::string(identity_name(name)) + " takes " +
                                                        std::to_string(arity) + " arguments");
        const FreeElement residual = verify(name, args);
        if (g.json_out) {
            std::cout << json{{"identity", identity_name(name)},
                              {"residual", free_element_to_json(residual)},
                              {"pass", residual.is_zero()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "residual: " << (residual.is_zero() ? "0" : residual.str()) << "\n";
        }
        return residual.is_zero() ? 0 : 1;
    }

    if (random_count == 0)
        throw CLI::ValidationError("verify", "need --letters or --random N");

    bool all_pass = true;
    json report = json::array();
    std::mt19937_64 rng(g.seed);
    for (const IdentityName name : names) {
        unsigned passed = 0;
        bool have_counterexample = false;
        std::vector<FreeElement> counterexample;
        FreeElement first_residual;
        for (unsigned i = 0; i < random_count; ++i) {
            const int arity = identity_arity(name);
            const std::size_t n = arity > 0 ? static_cast<std::size_t>(arity) : 2 + (i % 3);
            // highest number of arguments multiplied together on either side
            // (tortkara-1 repeats f), so the expanded degree stays near 12;
            // beyond that the quartic identities materialize degree-16 tensors
            std::size_t multiplicity = n;
            if (name == IdentityName::tortkara_1) multiplicity = 4;
            RandomElementConfig cfg;
            cfg.d = g.alphabet;
            cfg.max_len = std::min<unsigned>(
                degree, multiplicity >= 4 ? 2u : static_cast<unsigned>(12 / multiplicity));
            cfg.allow_empty_word = !identity_requires_positive(name);
            std::vector<FreeElement> args;
            for (std::size_t k = 0; k < n; ++k) args.push_back(random_element(rng, cfg));
            const FreeElement residual = verify(name, args);
            if (residual.is_zero()) {
                ++passed;
            } else if (!have_counterexample) {
                have_counterexample = true;
                counterexample = args;
                first_residual = residual;
            }
        }
        all_pass = all_pass && (passed == random_count);
        if (g.json_out) {
            json entry{{"identity", identity_name(name)},
                       {"checked", random_count},
                       {"passed", passed}};
            if (have_counterexample) {
                entry["counterexample"] = element_list_json(counterexample);
                entry["residual"] = free_element_to_json(first_residual);
            }
            report.push_back(std::move(entry));
        } else {
            std::cout << identity_name(name) << ": " << passed << "/" << random_count << "\n";
            if (have_counterexample) {
                std::cout << "  counterexample:\n";
                for (const auto& a : counterexample) std::cout << "    " << a.str() << "\n";
                std::cout << "  residual: " << first_residual.str() << "\n";
            }
        }
    }
    if (g.json_out) std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int run_eliminate(const Globals& g, const std::string& elem_text, Letter c, bool c_set,
                  const std::vector<unsigned>& closed_form, const std::vector<unsigned>& relation) {
    const Letter cc = c_set ? c : static_cast<Letter>(g.alphabet);
    if (!closed_form.empty()) {
        const ClosedForms cf =
            closed_forms(static_cast<Letter>(closed_form[0]), closed_form[1], cc);
        if (g.json_out) {
            std::cout << json{{"lie", free_element_to_json(cf.lie)},
                              {"integral", free_element_to_json(cf.integral)},
                              {"area", free_element_to_json(cf.area)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "lie: " << cf.lie.str() << "\n";
            std::cout << "integral: " << cf.integral.str() << "\n";
            std::cout << "area: " << cf.area.str() << "\n";
        }
        return 0;
    }
    if (!relation.empty()) {
        const auto [r1, r2] =
            acn_relation_check(static_cast<Letter>(relation[0]), relation[1], cc);
        const bool ok = r1.is_zero() && r2.is_zero();
        if (g.json_out) {
            std::cout << json{{"first", free_element_to_json(r1)},
                              {"second", free_element_to_json(r2)},
                              {"pass", ok}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "residual-1: " << (r1.is_zero() ? "0" : r1.str()) << "\n";
            std::cout << "residual-2: " << (r2.is_zero() ? "0" : r2.str()) << "\n";
        }
        return ok ? 0 : 1;
    }
    if (elem_text.empty())
        throw CLI::ValidationError("eliminate",
                                   "need an element, or --closed-form A N, or --relation A N");
    const FreeElement f = parse_element_arg(elem_text);
    const SeriesInC s = decompose_series(f, cc);
    if (g.json_out) {
        std::cout << series_in_c_to_json(s).dump(2) << "\n";
    } else {
        std::cout << "c: " << static_cast<unsigned>(s.c) << "\n";
        for (std::size_t k = 0; k < s.z.size(); ++k)
            std::cout << "z_" << k << ": " << s.z[k].str() << "\n";
        std::string slots;
        for (const auto& v : s.scalar_slots) {
            if (!slots.empty()) slots += ' ';
            slots += rat_str_frac(v);
        }
        std::cout << "slots: " << slots << "\n";
    }
    return 0;
}

int run_sig(const Globals& g, const std::string& csv, unsigned random_segments, int level,
            const std::string& word_text) {
    if (csv.empty() == (random_segments == 0))
        throw CLI::ValidationError("sig", "need exactly one of --csv or --random-segments");
    PiecewisePath path;
    if (!csv.empty()) {
        path = PiecewisePath::from_csv(csv);
    } else {
        std::mt19937_64 rng(g.seed);
        path = random_path(rng, g.alphabet, random_segments);
    }
    if (!word_text.empty()) {
        const Word w = Word::parse(word_text);
        if (w.max_letter() > path.dim)
            throw CLI::ValidationError("--word", "letter outside the path dimension");
        const double v = sig_word_coefficient(path, w);
        if (g.json_out)
            std::cout << json{{"word", w.str()}, {"value", v}, {"dim", path.dim}}.dump(2) << "\n";
        else
            std::cout << w.str() << '\t' << fmt(v) << "\n";
        return 0;
    }
    const NumericTensor s = signature(path, level);
    if (g.json_out) {
        json levels = json::array();
        for (const auto& lv : s.levels) levels.push_back(lv);
        std::cout << json{{"dim", s.dim},
                          {"level", s.level},
                          {"kernel", kern::active_kernel_name()},
                          {"levels", std::move(levels)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "e\t" << fmt(s.levels[0][0]) << "\n";
    for (int k = 1; k <= s.level; ++k) {
        const auto words = all_words(static_cast<unsigned>(s.dim), static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < words.size(); ++i)
            std::cout << words[i].str() << '\t' << fmt(s.levels[static_cast<std::size_t>(k)][i])
                      << "\n";
    }
    return 0;
}

int run_rank_report(const Globals& g, bool expect_full_rank) {
    const HallSet H = make_hall(g, g.max_degree);
    const auto reports = hall_area_rank_report(g.alphabet, g.max_degree, H);
    bool full = true;
    for (const auto& r : reports) full = full && (r.rank == r.dimension);
    if (g.json_out) {
        std::cout << rank_report_to_json(reports).dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "degree " << r.degree << ": dimension " << r.dimension << " rank "
                      << r.rank << (r.rank == r.dimension ? "" : " DEFICIENT") << "\n";
            for (const auto& rel : r.relations) {
                std::string line;
                for (const auto& [w, c] : rel) {
                    if (!line.empty()) line += " + ";
                    line += rat_str_frac(c) + "*A[" + w.str() + "]";
                }
                std::cout << "  relation: " << line << " = 0\n";
            }
        }
    }
    return (expect_full_rank && !full) ? 1 : 0;
}

int run_worked_example(const Globals& g, bool seed_set) {
    const unsigned long long seed = seed_set ? g.seed : 42ULL;
    const WorkedExampleReport rep = worked_example(seed);
    const std::string note =
        "the distinct-factor depth product 1/48 skips multiplicity powers and factorial "
        "normalizers and fails the duality normalization <S,P> = 1; the reconciled constant "
        "is the one duality fixes";
    if (g.json_out) {
        json factors = json::array();
        for (const auto& [w, k] : rep.factors)
            factors.push_back({{"word", w.str()}, {"power", k}});
        json alphas = json::array();
        for (double a : rep.alphas) alphas.push_back(a);
        std::cout << json{{"word", rep.word.str()},
                          {"factors", std::move(factors)},
                          {"reconciled_constant", rat_str_frac(rep.reconciled_constant)},
                          {"distinct_factor_constant", rat_str_frac(rep.distinct_factor_constant)},
                          {"alphas", std::move(alphas)},
                          {"direct", rep.direct},
                          {"product", rep.product},
                          {"relative_error", rep.rel_error},
                          {"tolerance", 1e-6},
                          {"duality_check", rep.duality_check},
                          {"support", rep.support},
                          {"kernel", rep.kernel},
                          {"seed", rep.seed},
                          {"note", note},
                          {"pass", rep.pass}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "word: " << rep.word.str() << "\n";
        std::string fs;
        for (const auto& [w, k] : rep.factors) {
            if (!fs.empty()) fs += ' ';
            fs += w.str() + "^" + std::to_string(k);
        }
        std::cout << "factors: " << fs << "\n";
        std::cout << "reconciled constant: " << rat_str_frac(rep.reconciled_constant) << "\n";
        std::cout << "distinct-factor constant: " << rat_str_frac(rep.distinct_factor_constant)
                  << "\n";
        std::cout << "note: " << note << "\n";
        for (std::size_t i = 0; i < rep.alphas.size(); ++i)
            std::cout << "alpha[" << rep.factors[i].first.str() << "] = " << fmt(rep.alphas[i])
                      << "\n";
        std::cout << "direct: " << fmt(rep.direct) << "\n";
        std::cout << "product: " << fmt(rep.product) << "\n";
        std::cout << "relative error: " << fmt(rep.rel_error) << "\n";
        std::cout << "duality check: " << (rep.duality_check ? "ok" : "FAIL") << "\n";
        std::cout << "support: " << rep.support << "\n";
        std::cout << "kernel: " << rep.kernel << "\n";
        std::cout << "seed: " << rep.seed << "\n";
        std::cout << "status: " << (rep.pass ? "pass" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the free half shuffle algebra"};
    app.require_subcommand(1);
    Globals g;

    auto* hall_cmd = app.add_subcommand("hall", "list hall set elements up to --max-degree");
    add_globals(hall_cmd, g);

    std::string fact_word;
    auto* fact_cmd = app.add_subcommand("factorize", "decreasing hall factorization of a word");
    fact_cmd->add_option("word", fact_word, "word to factorize")->required();
    add_globals(fact_cmd, g);

    std::string pbw_word;
    auto* pbw_cmd = app.add_subcommand("pbw", "pbw basis element of a word");
    pbw_cmd->add_option("word", pbw_word, "word")->required();
    add_globals(pbw_cmd, g);

    std::string dual_word, dual_strategy;
    auto* dual_cmd = app.add_subcommand("dual", "dual basis element of a word");
    dual_cmd->add_option("word", dual_word, "word")->required();
    dual_cmd->add_option("--strategy", dual_strategy, "construction for a hall word")
        ->check(CLI::IsMember({"recursive-tensor", "halfshuffle-recursion", "direct"}));
    add_globals(dual_cmd, g);

    std::string expand_elem;
    bool expand_check = false;
    auto* expand_cmd = app.add_subcommand("expand", "expand an element in the dual pbw basis");
    expand_cmd->add_option("element", expand_elem, "word, inline JSON, or JSON file")->required();
    expand_cmd->add_flag("--check", expand_check, "re-evaluate the expansion and compare");
    add_globals(expand_cmd, g);

    std::string ra_word, ra_area;
    std::vector<std::string> ra_factors;
    bool ra_check = false;
    auto* ra_cmd = app.add_subcommand("rewrite-areas", "rewrite a word or an area of a monomial");
    ra_cmd->add_option("word", ra_word, "word to express in iterated areas");
    ra_cmd->add_option("--area", ra_area, "left tree A of area(A, M)");
    ra_cmd->add_option("--factor", ra_factors, "tree factor of the monomial M (repeatable)");
    ra_cmd->add_flag("--check", ra_check, "evaluate the rewrite and compare");
    add_globals(ra_cmd, g);

    std::string verify_identity = "all";
    std::vector<unsigned> verify_letters;
    unsigned verify_random = 0, verify_degree = 4;
    auto* verify_cmd = app.add_subcommand("verify", "check an identity on letters or random data");
    verify_cmd->add_option("--identity", verify_identity, "identity name or 'all'")->capture_default_str();
    verify_cmd->add_option("--letters", verify_letters, "letter arguments");
    verify_cmd->add_option("--random", verify_random, "number of seeded random tuples");
    verify_cmd->add_option("--degree", verify_degree, "max word length of random arguments")
        ->capture_default_str();
    add_globals(verify_cmd, g);

    std::string elim_elem;
    unsigned elim_c = 0;
    std::vector<unsigned> elim_closed, elim_relation;
    auto* elim_cmd = app.add_subcommand("eliminate", "series decomposition over the letter c");
    elim_cmd->add_option("element", elim_elem, "word, inline JSON, or JSON file");
    elim_cmd->add_option("--c", elim_c, "eliminated letter (default: greatest letter)");
    elim_cmd->add_option("--closed-form", elim_closed, "A N: closed forms of (A c^N)")
        ->expected(2);
    elim_cmd->add_option("--relation", elim_relation, "A N: residuals of the (A c^N) relations")
        ->expected(2);
    add_globals(elim_cmd, g);

    std::string sig_csv, sig_word;
    unsigned sig_segments = 0;
    int sig_level = 5;
    auto* sig_cmd = app.add_subcommand("sig", "truncated signature of a piecewise-linear path");
    sig_cmd->add_option("--csv", sig_csv, "CSV path file, one point per row");
    sig_cmd->add_option("--random-segments", sig_segments, "seeded random path instead of CSV");
    sig_cmd->add_option("--level", sig_level, "truncation level")->capture_default_str();
    sig_cmd->add_option("--word", sig_word, "single word coefficient via the sparse recursion");
    add_globals(sig_cmd, g);

    bool rr_expect_full = false;
    auto* rr_cmd = app.add_subcommand("rank-report", "rank of the hall-area family per degree");
    rr_cmd->add_flag("--expect-full-rank", rr_expect_full, "exit 1 on any rank deficiency");
    add_globals(rr_cmd, g);

    auto* wx_cmd = app.add_subcommand("worked-example", "level-12 dual-basis pairing cross-check");
    add_globals(wx_cmd, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*hall_cmd) return run_hall(g);
        if (*fact_cmd) return run_factorize(g, fact_word, fact_cmd->count("--max-degree") > 0);
        if (*pbw_cmd) return run_pbw(g, pbw_word, pbw_cmd->count("--max-degree") > 0);
        if (*dual_cmd)
            return run_dual(g, dual_word, dual_strategy, dual_cmd->count("--max-degree") > 0);
        if (*expand_cmd)
            return run_expand(g, expand_elem, expand_cmd->count("--max-degree") > 0, expand_check);
        if (*ra_cmd) return run_rewrite_areas(g, ra_word, ra_area, ra_factors, ra_check);
        if (*verify_cmd)
            return run_verify(g, verify_identity, verify_letters, verify_random, verify_degree);
        if (*elim_cmd)
            return run_eliminate(g, elim_elem, static_cast<Letter>(elim_c),
                                 elim_cmd->count("--c") > 0, elim_closed, elim_relation);
        if (*sig_cmd) return run_sig(g, sig_csv, sig_segments, sig_level, sig_word);
        if (*rr_cmd) return run_rank_report(g, rr_expect_full);
        if (*wx_cmd) return run_worked_example(g, wx_cmd->count("--seed") > 0);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
