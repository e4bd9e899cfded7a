// Acceptance suite: ten end-to-end criteria, one verdict line each.
//
// Exit code counts criteria that failed unexpectedly. Criterion 4
// carries a pinned value that contradicts the independent oracle (see
// the verdict line it prints); that contradiction is reported honestly
// but does not fail the build.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "drig/instances.hpp"
#include "drig/lattice.hpp"
#include "drig/poly.hpp"
#include "drig/regex.hpp"
#include "drig/rig.hpp"
#include "drig/species.hpp"

using namespace drig;

namespace {

int unexpected_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void verdict(int n, bool ok, const std::string& what, double secs,
             bool expected_failure = false) {
    std::printf("criterion %2d: %s  %s  (%.1fs)%s\n", n, ok ? "PASS" : "FAIL",
                what.c_str(), secs,
                !ok && expected_failure ? "  [known contradiction, see below]" : "");
    if (!ok && !expected_failure) ++unexpected_failures;
}

// ------------------------------------------------------------- 1, 2, 3

void criterion_1() {
    Timer t;
    Rng rng(1001);
    lang::Alphabet alpha;
    auto words = lang::all_words(alpha, 8);
    std::size_t disagreements = 0;
    for (int i = 0; i < 500; ++i) {
        auto r = lang::random_regex(rng, alpha, 6);
        auto window = lang::enumerate(r, 8).words;
        for (const auto& w : words)
            if (lang::matches(r, w) != (window.count(w) > 0)) ++disagreements;
    }
    verdict(1, disagreements == 0 && t.seconds() <= 60,
            "matcher vs enumeration oracle, 500 regexes x words<=8, "
            "disagreements=" + std::to_string(disagreements),
            t.seconds());
}

void criterion_2() {
    Timer t;
    Rng rng(1002);
    lang::Alphabet alpha;
    std::size_t failures = 0;
    for (int i = 0; i < 200; ++i) {
        auto r = lang::random_regex(rng, alpha, 5);
        auto s = lang::random_regex(rng, alpha, 5);
        char a = alpha.symbols[i % alpha.symbols.size()];
        if (lang::check_twisted_leibniz(r, s, a, 8).failed()) ++failures;
    }
    // the untwisted variant must break somewhere: the twist is necessary
    auto untwisted = lang::check_untwisted_leibniz(
        lang::parse_regex("b"), lang::parse_regex("ab"), 'a', 6);
    bool twist_needed = untwisted.failed();
    if (twist_needed) {
        std::printf("  untwisted counterexample:");
        for (const auto& c : untwisted.counterexample) std::printf(" %s", c.c_str());
        std::printf("\n");
    }
    verdict(2, failures == 0 && twist_needed && t.seconds() <= 30,
            "twisted Leibniz on 200 triples; untwisted variant fails",
            t.seconds());
}

void criterion_3() {
    Timer t;
    Rng rng(1003);
    lang::Alphabet alpha;
    auto words = lang::all_words(alpha, 8);
    std::size_t disagreements = 0, blowups = 0;
    for (int i = 0; i < 100; ++i) {
        auto r = lang::random_regex(rng, alpha, 6);
        try {
            auto dfa = lang::build_dfa(r, alpha, 10000);
            for (const auto& w : words)
                if (dfa.accepts(w) != lang::matches(r, w)) ++disagreements;
        } catch (const Error&) {
            ++blowups;
        }
    }
    verdict(3, disagreements == 0 && blowups == 0,
            "derivative DFA vs matcher, 100 regexes, state cap never hit",
            t.seconds());
}

// ---------------------------------------------------------- 4, 5, 6

void criterion_4() {
    Timer t;
    Rng rng(1004);
    std::size_t disagreements = 0;
    for (int i = 0; i < 200; ++i) {
        auto f = species::random_species(rng, 4);
        auto s = species::seq_of(f, 7);
        for (std::size_t n = 0; n <= 7; ++n)
            if (s.coeffs[n] != species::count_structures(f, n)) ++disagreements;
    }
    auto dxx = species::seq_of(species::parse_species("(X*X)'"), 3);
    bool pinned_dxx = species::render_cardseq(dxx) == "[0,2,0,0]";
    auto exx = species::seq_of(species::parse_species("E o (X*X)"), 4);
    bool pinned_exx = species::render_cardseq(exx) == "[1,0,1,0,3]";
    bool ok = disagreements == 0 && pinned_dxx && pinned_exx && t.seconds() <= 120;
    verdict(4, ok,
            "species evaluator vs brute-force oracle (200 exprs, n<=7), "
            "disagreements=" + std::to_string(disagreements) +
                "; pinned (X*X)'=" + std::string(pinned_dxx ? "ok" : "BAD") +
                ", pinned E o (X*X)=" + std::string(pinned_exx ? "ok" : "BAD"),
            t.seconds(), /*expected_failure=*/disagreements == 0 && pinned_dxx);
    if (!pinned_exx)
        std::printf(
            "  note: the pinned sequence [1,0,1,0,3] for E o (X*X) contradicts\n"
            "  both the evaluator and the independent structure-count oracle,\n"
            "  which agree on %s: a 4-set has 3 perfect matchings and each\n"
            "  2-block carries 2 ordered-pair structures (3*2*2 = 12, the t^4\n"
            "  coefficient of e^{t^2} times 4!). The pinned value counts bare\n"
            "  matchings, dropping the per-block weights, and is inconsistent\n"
            "  with the pinned (X*X)' = [0,2,0,0] above.\n",
            species::render_cardseq(exx).c_str());
}

void criterion_5() {
    Timer t;
    Rng rng(1005);
    std::size_t failures = 0;
    for (int i = 0; i < 100; ++i) {
        auto f = species::random_species(rng, 3);
        auto g = species::random_species(rng, 3);
        if (species::seq_of(g, 0).coeffs[0] != 0)
            g = species::SpeciesExpr::prod(species::SpeciesExpr::x(), g);
        if (species::check_chain_rule(f, g, 10).failed()) ++failures;
    }
    // the e^{t^2} case: chi(E o X^2) has 1/k! at t^{2k} and 0 elsewhere
    auto egf = species::chi_egf(species::parse_species("E o (X*X)"), 8);
    bool exp_t2 = true;
    species::BigInt kfact = 1;
    for (std::size_t n = 0; n <= 8; ++n) {
        species::Rational expect = 0;
        if (n % 2 == 0) {
            if (n > 0) kfact *= static_cast<unsigned>(n / 2);
            expect = species::Rational(1) / species::Rational(kfact);
        }
        if (egf.coeffs[n] != expect) exp_t2 = false;
    }
    verdict(5, failures == 0 && exp_t2,
            "chain rule on 100 pairs at N=10; chi(E o X^2) = e^{t^2}",
            t.seconds());
}

void criterion_6() {
    Timer t;
    Rng rng(1006);
    std::size_t failures = 0;
    for (int i = 0; i < 50; ++i) {
        auto f = species::random_species(rng, 2);
        auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        if (species::check_power_rule(f, n, 10).failed()) ++failures;
    }
    for (int i = 0; i < 50; ++i) {
        std::vector<species::SpeciesExpr> fs;
        auto k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        for (std::size_t j = 0; j < k; ++j)
            fs.push_back(species::random_species(rng, 2));
        if (species::check_tuple_rule(fs, 10).failed()) ++failures;
    }
    for (int i = 0; i < 50; ++i) {
        auto f = species::random_species(rng, 2);
        auto g = species::random_species(rng, 2);
        auto n = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        if (species::check_nfold_leibniz(f, g, n, 10).failed()) ++failures;
    }
    verdict(6, failures == 0,
            "power (n<=5), tuple (<=4 factors), n-fold Leibniz (n<=3), 50 each",
            t.seconds());
}

// ---------------------------------------------------------- 7, 8

void criterion_7() {
    Timer t;
    bool ok = true;
    auto nat = make_nat_rig();
    auto cardinal = make_cardinal_rig();
    auto boolean = make_bool_rig();
    auto cardseq = species::make_cardseq_rig();
    auto polynat = poly::make_poly_rig(nat);

    auto suite = [&](const RigInstance& inst,
                     const DerivationDescriptor* d) {
        if (!all_passed(check_rig_laws(inst, 500, 7))) ok = false;
        if (d)
            for (const auto& r : check_derivation_laws(inst, *d, 500, 7))
                if (r.failed()) ok = false;
    };
    auto d_triv = make_trivial_derivation(nat);
    auto d_omega = make_cardinal_omega_derivation();
    auto d_bool = make_bool_identity_derivation();
    auto d_shift = species::make_shift_derivation();
    auto d_poly = poly::make_poly_derivation(nat);
    suite(nat, &d_triv);
    suite(cardinal, &d_omega);
    suite(boolean, &d_bool);
    suite(cardseq, &d_shift);
    suite(polynat, &d_poly);

    // deliberately broken fixture: add(x, y) = x + 2y is not commutative
    RigInstance broken = make_nat_rig();
    broken.name = "broken";
    broken.finite_carrier.reset();
    broken.add = [](const Value& a, const Value& b) -> Value {
        return std::any_cast<std::uint64_t>(a) + 2 * std::any_cast<std::uint64_t>(b);
    };
    auto reports = check_rig_laws(broken, 200, 7);
    bool broken_caught = false, replayed = false;
    for (const auto& r : reports)
        if (r.law == "add-comm" && r.failed() && !r.witness.empty()) {
            broken_caught = true;
            for (const auto& law : rig_laws())
                if (law.name == "add-comm")
                    replayed = !law.pred(broken, r.witness);  // still fails
        }
    verdict(7, ok && broken_caught && replayed,
            "five instance law suites pass; broken fixture fails with a "
            "replayable counterexample",
            t.seconds());
}

void criterion_8() {
    Timer t;
    bool ok = true;
    auto nat = make_nat_rig();
    auto cardinal = make_cardinal_rig();
    auto cardseq = species::make_cardseq_rig();
    auto chain = lattice::parse_poset("elements: 0 1\n0 < 1\n");
    auto dsets = lattice::make_downset_rig(chain);

    auto ss_nat = find_self_similar(nat);
    if (!(ss_nat.taut && ss_nat.elements.size() == 1)) ok = false;
    auto ss_seq = find_self_similar(cardseq);
    if (!(ss_seq.taut && ss_seq.elements.size() == 1)) ok = false;
    auto ss_card = find_self_similar(cardinal);
    if (ss_card.taut || ss_card.elements.size() != 2) ok = false;
    auto ss_down = find_self_similar(dsets);
    if (ss_down.elements.size() != lattice::downsets(chain).size()) ok = false;

    auto d_triv = make_trivial_derivation(nat);
    auto d_omega = make_cardinal_omega_derivation();
    auto d_bool = make_bool_identity_derivation();
    auto d_shift = species::make_shift_derivation();
    auto d_bound = lattice::make_boundary_derivation();
    auto boolean = make_bool_rig();
    if (derivation_unit_report(nat, d_triv).failed()) ok = false;
    if (derivation_unit_report(cardinal, d_omega).failed()) ok = false;
    if (derivation_unit_report(boolean, d_bool).failed()) ok = false;
    if (derivation_unit_report(cardseq, d_shift).failed()) ok = false;
    if (derivation_unit_report(dsets, d_bound).failed()) ok = false;

    verdict(8, ok,
            "self-similar sets: {0} nat/cardseq, {0,w} cardinal, full carrier "
            "for down-sets; d(1) add-idempotent everywhere",
            t.seconds());
}

// ---------------------------------------------------------- 9, 10

void criterion_9() {
    Timer t;
    Rng rng(1009);
    bool ok = true;
    auto leq = [](const lattice::DownSet& a, const lattice::DownSet& b) {
        return (a.mask & ~b.mask) == 0;
    };
    for (int i = 0; i < 50; ++i) {
        auto p = lattice::random_poset(rng, 5);
        auto carrier = lattice::downsets(p);
        for (const auto& y : carrier)
            for (const auto& x : carrier) {
                auto c = lattice::cosubtract(y, x);
                if (!(c == lattice::cosubtract_bruteforce(y, x))) ok = false;
                for (const auto& z : carrier)
                    if (leq(c, z) != leq(y, lattice::join(x, z))) ok = false;
            }
        if (lattice::check_leibniz_boundary(p).failed()) ok = false;
    }
    auto chain = lattice::parse_poset("elements: 0 1\n0 < 1\n");
    auto cex = lattice::find_linearity_counterexample(chain);
    bool chain_cex = cex.has_value() &&
                     lattice::render_downset(cex->first) == "{0}" &&
                     lattice::render_downset(cex->second) == "{0,1}";
    verdict(9, ok && chain_cex && t.seconds() <= 30,
            "co-Heyting suite on 50 posets: adjointness, closed form = oracle, "
            "Leibniz; 2-chain linearity counterexample ({0}, top)",
            t.seconds());
}

void criterion_10() {
    Timer t;
    bool ok = true;
    // X' = X: the all-ones sequence (sets) is a fixed point, X is not
    auto eq = poly::parse_diffpoly("Y(1)");
    species::CardSeq ones;
    ones.coeffs.assign(10, 1);
    if (poly::dpe_check_solution(eq, ones, 8).failed()) ok = false;
    species::CardSeq xseq;
    xseq.coeffs = {0, 1, 0, 0, 0};
    if (!poly::dpe_check_solution(eq, xseq, 3).failed()) ok = false;

    auto cardinal = make_cardinal_rig();
    auto d_omega = make_cardinal_omega_derivation();
    auto fixed = napier_search(cardinal, d_omega);
    if (fixed.size() != 2) ok = false;  // {0, w}

    auto chain = iterate_derivation_chain(cardinal, d_omega, cardinal.one, 5);
    if (!(chain.stabilized_at == std::size_t{1} &&
          std::any_cast<Cardinal>(chain.values[1]) == Cardinal::inf()))
        ok = false;

    verdict(10, ok,
            "all-ones solves X' = X and X does not; cardinal fixed points "
            "{0,w}; chain from 1 stabilizes at w after one step",
            t.seconds());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("unexpected failures: %d\n", unexpected_failures);
    return unexpected_failures;
}
