// drig: law-checking harness and calculators for rigs with derivations.
//
// Subcommands: laws, regex {match,derive,dfa,leibniz},
// species {seq,count,egf,check}, poly {derive,eval}, dpoly derive,
// dpe check, lattice {boundary,leibniz,linearity}.
//
// Exit codes: 0 success / all laws pass, 1 a law failed, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "drig/instances.hpp"
#include "drig/lattice.hpp"
#include "drig/poly.hpp"
#include "drig/regex.hpp"
#include "drig/rig.hpp"
#include "drig/species.hpp"

namespace {

using namespace drig;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    std::size_t maxlen = 8;
};

void print_reports(const std::vector<LawReport>& reports, bool json) {
    if (json) {
        std::cout << reports_to_json(reports) << "\n";
        return;
    }
    for (const auto& r : reports) {
        std::printf("%-28s %-18s %-20s samples=%zu", r.instance.c_str(),
                    r.law.c_str(), status_name(r.status).c_str(), r.samples);
        if (!r.counterexample.empty()) {
            std::printf("  counterexample:");
            for (const auto& c : r.counterexample) std::printf(" %s", c.c_str());
        }
        std::printf("\n");
    }
}

int report_exit(const std::vector<LawReport>& reports) {
    return all_passed(reports) ? 0 : 1;
}

// Parses "2,0,1" over the named base; "w" denotes omega in the
// cardinal rig.
std::vector<Value> parse_coeffs(const std::string& text, const RigInstance& base) {
    std::vector<Value> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (base.name == "cardinal") {
            if (tok == "w")
                out.emplace_back(Cardinal::inf());
            else
                out.emplace_back(Cardinal::finite(std::stoull(tok)));
        } else {
            out.emplace_back(static_cast<std::uint64_t>(std::stoull(tok)));
        }
    }
    return out;
}

species::CardSeq parse_seq(const std::string& text) {
    species::CardSeq s;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) s.coeffs.emplace_back(std::stoll(tok));
    if (s.coeffs.empty()) throw Error("empty sequence");
    return s;
}

std::string word_arg(const std::string& w) { return w == "()" ? "" : w; }

void check_word(const std::string& w, const lang::Alphabet& alpha) {
    for (char c : w)
        if (!alpha.contains(c))
            throw lang::ParseError(
                std::string("word symbol '") + c + "' not in alphabet", 0);
}

// ---------------------------------------------------------------- laws

int run_laws(const std::string& name, const Options& opt) {
    RigInstance inst;
    std::vector<DerivationDescriptor> ders;
    lattice::PosetPtr poset;

    if (name == "nat") {
        inst = make_nat_rig();
        ders.push_back(make_trivial_derivation(inst));
    } else if (name == "cardinal") {
        inst = make_cardinal_rig();
        ders.push_back(make_cardinal_omega_derivation());
    } else if (name == "bool") {
        inst = make_bool_rig();
        ders.push_back(make_bool_identity_derivation());
    } else if (name == "langwindow") {
        inst = lang::make_langwindow_rig();
        // the twisted derivation lives at the regex level: `regex leibniz`
    } else if (name == "cardseq") {
        inst = species::make_cardseq_rig();
        ders.push_back(species::make_shift_derivation());
    } else if (name.rfind("downsets:", 0) == 0) {
        poset = lattice::load_poset(name.substr(9));
        inst = lattice::make_downset_rig(poset);
        ders.push_back(lattice::make_boundary_derivation());
    } else if (name != "poly-nat") {
        std::cerr << "unknown instance: " << name << "\n";
        return 2;
    }

    // poly-nat needs its base to outlive the polynomial values
    RigInstance nat_base;
    if (name == "poly-nat") {
        nat_base = make_nat_rig();
        inst = poly::make_poly_rig(nat_base);
        ders.push_back(poly::make_poly_derivation(nat_base));
    }

    auto reports = check_rig_laws(inst, opt.samples, opt.seed);
    for (const auto& d : ders) {
        auto dr = check_derivation_laws(inst, d, opt.samples, opt.seed);
        reports.insert(reports.end(), dr.begin(), dr.end());
        reports.push_back(derivation_unit_report(inst, d));
    }
    print_reports(reports, opt.json);
    if (!opt.json && inst.finite_carrier) {
        auto ss = find_self_similar(inst);
        std::printf("self-similar:");
        for (const auto& v : ss.elements) std::printf(" %s", inst.render(v).c_str());
        std::printf("  (%s)\n", ss.taut ? "taut" : "nontaut");
    }
    return report_exit(reports);
}

// --------------------------------------------------------------- regex

int run_regex_leibniz(const Options& opt) {
    lang::Alphabet alpha;
    Rng rng(opt.seed);
    std::vector<LawReport> reports;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        auto r = lang::random_regex(rng, alpha, 5);
        auto s = lang::random_regex(rng, alpha, 5);
        char a = alpha.symbols[std::uniform_int_distribution<std::size_t>(
            0, alpha.symbols.size() - 1)(rng)];
        auto t = lang::check_twisted_leibniz(r, s, a, opt.maxlen);
        auto l = lang::check_linearity(r, s, a, opt.maxlen);
        if (t.failed()) reports.push_back(t);
        if (l.failed()) reports.push_back(l);
    }
    LawReport summary;
    summary.instance = "langrig";
    summary.law = "twisted-leibniz+linearity-sweep";
    summary.samples = opt.samples;
    if (!reports.empty()) summary = reports.front();
    std::vector<LawReport> out{summary};
    print_reports(out, opt.json);

    // demonstrate that the twist is necessary
    Rng rng2(opt.seed);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        auto r = lang::random_regex(rng2, alpha, 5);
        auto s = lang::random_regex(rng2, alpha, 5);
        char a = alpha.symbols[std::uniform_int_distribution<std::size_t>(
            0, alpha.symbols.size() - 1)(rng2)];
        auto u = lang::check_untwisted_leibniz(r, s, a, opt.maxlen);
        if (u.failed()) {
            if (!opt.json) {
                std::printf("untwisted variant fails (twist is necessary):");
                for (const auto& c : u.counterexample)
                    std::printf(" %s", c.c_str());
                std::printf("\n");
            }
            break;
        }
    }
    return report_exit(out);
}

// --------------------------------------------------------------- species

int run_species_check(const std::string& which, const Options& opt,
                      std::size_t cases) {
    Rng rng(opt.seed);
    std::vector<LawReport> reports;
    for (std::size_t i = 0; i < cases; ++i) {
        if (which == "chain") {
            auto f = species::random_species(rng, 3);
            auto g = species::random_species(rng, 3);
            if (species::seq_of(g, 0).coeffs[0] != 0)
                g = species::SpeciesExpr::prod(species::SpeciesExpr::x(), g);
            reports.push_back(species::check_chain_rule(f, g, 10));
        } else if (which == "power") {
            auto f = species::random_species(rng, 2);
            auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
            reports.push_back(species::check_power_rule(f, n, 10));
        } else if (which == "leibniz") {
            auto f = species::random_species(rng, 2);
            auto g = species::random_species(rng, 2);
            auto n = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
            reports.push_back(species::check_nfold_leibniz(f, g, n, 10));
        } else {
            std::cerr << "unknown check: " << which << "\n";
            return 2;
        }
    }
    std::vector<LawReport> shown;
    LawReport summary;
    summary.instance = "species";
    summary.law = which + "-sweep";
    summary.samples = cases;
    for (const auto& r : reports)
        if (r.failed()) { summary = r; break; }
    shown.push_back(summary);
    print_reports(shown, opt.json);
    return report_exit(shown);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential 2-rig toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "emit JSON law reports");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--samples", opt.samples, "samples per law / sweep size");
    app.add_option("--maxlen", opt.maxlen, "language window length");

    std::string laws_instance;
    auto* laws = app.add_subcommand("laws", "run rig + derivation law suites");
    laws->add_option("instance", laws_instance,
                     "nat|cardinal|bool|langwindow|cardseq|poly-nat|downsets:<file>")
        ->required();

    auto* regex = app.add_subcommand("regex", "Brzozowski derivative engine");
    std::string rx_pattern, rx_word;
    auto* rx_match = regex->add_subcommand("match", "match a word");
    rx_match->add_option("pattern", rx_pattern)->required();
    rx_match->add_option("word", rx_word)->required();
    auto* rx_derive = regex->add_subcommand("derive", "print canonical derivative");
    rx_derive->add_option("pattern", rx_pattern)->required();
    rx_derive->add_option("word", rx_word)->required();
    auto* rx_dfa = regex->add_subcommand("dfa", "print derivative-classes DFA");
    rx_dfa->add_option("pattern", rx_pattern)->required();
    auto* rx_leibniz =
        regex->add_subcommand("leibniz", "seeded twisted-Leibniz sweep");

    auto* sp = app.add_subcommand("species", "combinatorial species calculus");
    std::string sp_expr, sp_which;
    std::size_t sp_n = 7, sp_size = 0, sp_cases = 100;
    auto* sp_seq = sp->add_subcommand("seq", "cardinality sequence");
    sp_seq->add_option("expr", sp_expr)->required();
    sp_seq->add_option("--n", sp_n, "truncation");
    auto* sp_count = sp->add_subcommand("count", "brute-force structure count");
    sp_count->add_option("expr", sp_expr)->required();
    sp_count->add_option("--size", sp_size, "label set size")->required();
    auto* sp_egf = sp->add_subcommand("egf", "exponential generating series");
    sp_egf->add_option("expr", sp_expr)->required();
    sp_egf->add_option("--n", sp_n, "truncation");
    auto* sp_check = sp->add_subcommand("check", "law sweeps");
    sp_check->add_option("which", sp_which, "chain|power|leibniz")->required();
    sp_check->add_option("--cases", sp_cases, "number of seeded cases");

    auto* po = app.add_subcommand("poly", "polynomials over a base rig");
    std::string po_coeffs, po_base = "nat", po_at;
    auto* po_derive = po->add_subcommand("derive", "derivative with dY = 1");
    po_derive->add_option("coeffs", po_coeffs, "comma-separated, low degree first")
        ->required();
    po_derive->add_option("--base", po_base, "nat|cardinal");
    auto* po_eval = po->add_subcommand("eval", "evaluate at Y = e");
    po_eval->add_option("coeffs", po_coeffs)->required();
    po_eval->add_option("--base", po_base, "nat|cardinal");
    po_eval->add_option("--at", po_at, "element of the base")->required();

    auto* dpo = app.add_subcommand("dpoly", "differential polynomials");
    std::string dp_text;
    auto* dpo_derive = dpo->add_subcommand("derive", "Y(i) -> Y(i+1) + Leibniz");
    dpo_derive->add_option("poly", dp_text, "e.g. \"Y(0)*Y(1) + 2\"")->required();

    auto* dpe = app.add_subcommand("dpe", "differential polynomial equations");
    std::string dpe_text, dpe_candidate;
    std::size_t dpe_n = 0;
    bool dpe_have_n = false;
    auto* dpe_check = dpe->add_subcommand("check", "X = dp(X, X', ...) fixed point");
    dpe_check->add_option("poly", dpe_text)->required();
    dpe_check->add_option("--candidate", dpe_candidate, "comma-separated sequence")
        ->required();
    dpe_check->add_option("--n", dpe_n, "comparison truncation")
        ->each([&](const std::string&) { dpe_have_n = true; });

    auto* lat = app.add_subcommand("lattice", "co-Heyting boundary operators");
    std::string lat_poset, lat_set;
    auto* lat_boundary = lat->add_subcommand("boundary", "x ^ conot(x)");
    lat_boundary->add_option("--poset", lat_poset)->required();
    lat_boundary->add_option("--set", lat_set, "comma-separated element names")
        ->required();
    auto* lat_leibniz = lat->add_subcommand("leibniz", "exhaustive Leibniz check");
    lat_leibniz->add_option("--poset", lat_poset)->required();
    auto* lat_linearity =
        lat->add_subcommand("linearity", "search for a linearity counterexample");
    lat_linearity->add_option("--poset", lat_poset)->required();

    // let trailing global options (--json, --seed, ...) reach the top level
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* s : a->get_subcommands([](const CLI::App*) { return true; }))
            allow_fallthrough(s);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (laws->parsed()) return run_laws(laws_instance, opt);

        lang::Alphabet alpha;
        if (rx_match->parsed()) {
            auto r = lang::parse_regex(rx_pattern, alpha);
            auto w = word_arg(rx_word);
            check_word(w, alpha);
            std::cout << (lang::matches(r, w) ? "true" : "false") << "\n";
            return 0;
        }
        if (rx_derive->parsed()) {
            auto r = lang::parse_regex(rx_pattern, alpha);
            auto w = word_arg(rx_word);
            check_word(w, alpha);
            std::cout << lang::print_regex(lang::deriv_word(r, w)) << "\n";
            return 0;
        }
        if (rx_dfa->parsed()) {
            auto r = lang::parse_regex(rx_pattern, alpha);
            auto dfa = lang::build_dfa(r, alpha);
            std::printf("states: %zu  start: %zu\n", dfa.states.size(), dfa.start);
            for (std::size_t i = 0; i < dfa.states.size(); ++i) {
                std::printf("state %zu: %s%s ", i,
                            lang::print_regex(dfa.states[i]).c_str(),
                            dfa.accepting[i] ? " (accepting)" : "");
                for (std::size_t k = 0; k < alpha.symbols.size(); ++k)
                    std::printf(" %c->%zu", alpha.symbols[k], dfa.trans[i][k]);
                std::printf("\n");
            }
            return 0;
        }
        if (rx_leibniz->parsed()) return run_regex_leibniz(opt);

        if (sp_seq->parsed()) {
            auto f = species::parse_species(sp_expr);
            std::cout << species::render_cardseq(species::seq_of(f, sp_n)) << "\n";
            return 0;
        }
        if (sp_count->parsed()) {
            auto f = species::parse_species(sp_expr);
            std::cout << species::count_structures(f, sp_size).str() << "\n";
            return 0;
        }
        if (sp_egf->parsed()) {
            auto f = species::parse_species(sp_expr);
            std::cout << species::chi_egf(f, sp_n).render() << "\n";
            return 0;
        }
        if (sp_check->parsed()) return run_species_check(sp_which, opt, sp_cases);

        RigInstance base;
        if (po_derive->parsed() || po_eval->parsed()) {
            if (po_base == "nat")
                base = make_nat_rig();
            else if (po_base == "cardinal")
                base = make_cardinal_rig();
            else {
                std::cerr << "unknown base: " << po_base << "\n";
                return 2;
            }
        }
        if (po_derive->parsed()) {
            auto p = poly::make_poly(base, parse_coeffs(po_coeffs, base));
            auto d = poly::poly_derive(p);
            std::string out;
            for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
                if (i) out += ",";
                out += base.render(d.coeffs[i]);
            }
            std::cout << (out.empty() ? "0" : out) << "\n";
            return 0;
        }
        if (po_eval->parsed()) {
            auto p = poly::make_poly(base, parse_coeffs(po_coeffs, base));
            auto e = parse_coeffs(po_at, base).at(0);
            auto id = [](const Value& v) { return v; };
            std::cout << base.render(poly::poly_eval(p, id, base, e)) << "\n";
            return 0;
        }

        if (dpo_derive->parsed()) {
            auto dp = poly::parse_diffpoly(dp_text);
            std::cout << poly::render_diffpoly(poly::diffpoly_derive(dp)) << "\n";
            return 0;
        }
        if (dpe_check->parsed()) {
            auto dp = poly::parse_diffpoly(dpe_text);
            auto cand = parse_seq(dpe_candidate);
            unsigned k = poly::diffpoly_order(dp);
            std::size_t n = dpe_have_n
                                ? dpe_n
                                : (cand.coeffs.size() > k + 1
                                       ? cand.coeffs.size() - 1 - k
                                       : 0);
            auto rep = poly::dpe_check_solution(dp, cand, n);
            print_reports({rep}, opt.json);
            return report_exit({rep});
        }

        if (lat_boundary->parsed()) {
            auto p = lattice::load_poset(lat_poset);
            std::uint32_t mask = 0;
            std::string tok;
            std::istringstream in(lat_set);
            while (std::getline(in, tok, ',')) {
                auto idx = p->index_of(tok);
                if (!idx) throw Error("unknown element: " + tok);
                mask |= std::uint32_t{1} << *idx;
            }
            auto x = lattice::make_downset(p, mask);
            std::cout << lattice::render_downset(lattice::boundary(x)) << "\n";
            return 0;
        }
        if (lat_leibniz->parsed()) {
            auto p = lattice::load_poset(lat_poset);
            auto rep = lattice::check_leibniz_boundary(p);
            print_reports({rep}, opt.json);
            return report_exit({rep});
        }
        if (lat_linearity->parsed()) {
            auto p = lattice::load_poset(lat_poset);
            auto cex = lattice::find_linearity_counterexample(p);
            if (!cex) {
                std::cout << "none\n";
                return 0;
            }
            std::cout << "counterexample: a=" << lattice::render_downset(cex->first)
                      << " b=" << lattice::render_downset(cex->second) << "\n";
            return 1;
        }
    } catch (const lang::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "missing subcommand\n";
    return 2;
}
