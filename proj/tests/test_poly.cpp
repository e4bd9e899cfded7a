#include <doctest.h>

#include "drig/instances.hpp"
#include "drig/poly.hpp"

using namespace drig;
using namespace drig::poly;

namespace {

std::uint64_t u(std::uint64_t v) { return v; }

Poly np(const RigInstance& nat, std::initializer_list<std::uint64_t> cs) {
    std::vector<Value> coeffs;
    for (auto c : cs) coeffs.emplace_back(c);
    return make_poly(nat, std::move(coeffs));
}

}  // namespace

TEST_CASE("polynomial arithmetic over the naturals") {
    auto nat = make_nat_rig();
    SUBCASE("(1+Y)^2 = 1 + 2Y + Y^2") {
        auto p = np(nat, {1, 1});
        CHECK(poly_eq(poly_mul(p, p), np(nat, {1, 2, 1})));
    }
    SUBCASE("trailing zeros are stripped; degree of zero is -1") {
        CHECK(poly_degree(np(nat, {0, 0, 0})) == -1);
        CHECK(poly_degree(np(nat, {5, 0, 1, 0})) == 2);
        CHECK(poly_eq(np(nat, {0}), poly_zero(nat)));
    }
    SUBCASE("add is coefficientwise") {
        CHECK(poly_eq(poly_add(np(nat, {1, 2}), np(nat, {0, 3, 4})),
                      np(nat, {1, 5, 4})));
    }
    SUBCASE("degree of a product adds") {
        auto p = np(nat, {0, 1, 1});
        auto q = np(nat, {2, 0, 0, 1});
        CHECK(poly_degree(poly_mul(p, q)) == 5);
    }
    SUBCASE("render") {
        CHECK(render_poly(np(nat, {2, 0, 1})) == "2 + Y^2");
        CHECK(render_poly(np(nat, {0, 1})) == "Y");
        CHECK(render_poly(poly_zero(nat)) == "0");
        CHECK(render_poly(np(nat, {0, 3, 0, 1})) == "3*Y + Y^3");
    }
    SUBCASE("base rig mismatch is an error") {
        auto card = make_cardinal_rig();
        auto p = np(nat, {1});
        Poly q = make_poly(card, {Value(Cardinal::finite(1))});
        CHECK_THROWS_AS(poly_add(p, q), Error);
    }
}

TEST_CASE("polynomials over the cardinals absorb into omega") {
    auto card = make_cardinal_rig();
    auto w = Value(Cardinal::inf());
    auto one = Value(Cardinal::finite(1));
    auto p = make_poly(card, {one, w});   // 1 + wY
    auto q = make_poly(card, {one, one}); // 1 + Y
    // (1 + wY)(1 + Y) = 1 + (w+1)Y + wY^2 = 1 + wY + wY^2
    auto prod = poly_mul(p, q);
    auto expect = make_poly(card, {one, w, w});
    CHECK(poly_eq(prod, expect));
    CHECK(render_poly(prod) == "1 + w*Y + w*Y^2");
}

TEST_CASE("poly_derive") {
    auto nat = make_nat_rig();
    SUBCASE("d(Y^3) = 3Y^2") {
        CHECK(poly_eq(poly_derive(np(nat, {0, 0, 0, 1})), np(nat, {0, 0, 3})));
    }
    SUBCASE("d of a constant is zero") {
        CHECK(poly_eq(poly_derive(np(nat, {7})), poly_zero(nat)));
    }
    SUBCASE("two routes to d((1+Y)^2)") {
        auto p = np(nat, {1, 1});
        auto route1 = poly_derive(poly_mul(p, p));
        // Leibniz by hand: p'p + pp'
        auto route2 = poly_add(poly_mul(poly_derive(p), p),
                               poly_mul(p, poly_derive(p)));
        CHECK(poly_eq(route1, route2));
        CHECK(poly_eq(route1, np(nat, {2, 2})));
    }
    SUBCASE("a base derivation contributes termwise") {
        auto card = make_cardinal_rig();
        auto dw = make_cardinal_omega_derivation();
        // d(2 + 3Y) = d(2) + d(3)Y + 3 = (w + 3) + wY = w + wY
        auto p = make_poly(card, {Value(Cardinal::finite(2)),
                                  Value(Cardinal::finite(3))});
        auto d = poly_derive(p, &dw);
        auto expect = make_poly(card, {Value(Cardinal::inf()), Value(Cardinal::inf())});
        CHECK(poly_eq(d, expect));
    }
}

TEST_CASE("poly_eval") {
    auto nat = make_nat_rig();
    auto ident = [](const Value& v) { return v; };
    SUBCASE("Y^2 + 2 at 3 is 11") {
        auto p = np(nat, {2, 0, 1});
        auto v = poly_eval(p, ident, nat, Value(u(3)));
        CHECK(std::any_cast<std::uint64_t>(v) == 11);
    }
    SUBCASE("evaluation at 0 is the constant coefficient") {
        auto p = np(nat, {5, 7, 9});
        CHECK(std::any_cast<std::uint64_t>(
                  poly_eval(p, ident, nat, Value(u(0)))) == 5);
    }
    SUBCASE("evaluation is a rig homomorphism") {
        Rng rng(6);
        auto inst = make_poly_rig(nat);
        for (int i = 0; i < 100; ++i) {
            auto p = std::any_cast<Poly>(inst.sample(rng));
            auto q = std::any_cast<Poly>(inst.sample(rng));
            auto e = Value(u(std::uniform_int_distribution<std::uint64_t>(0, 4)(rng)));
            auto ev = [&](const Poly& r) {
                return std::any_cast<std::uint64_t>(poly_eval(r, ident, nat, e));
            };
            CHECK(ev(poly_add(p, q)) == ev(p) + ev(q));
            CHECK(ev(poly_mul(p, q)) == ev(p) * ev(q));
        }
        CHECK(std::any_cast<std::uint64_t>(
                  poly_eval(poly_one(nat), ident, nat, Value(u(9)))) == 1);
    }
    SUBCASE("evaluation into another rig via a hom") {
        // uint64 -> Cardinal is a rig map; evaluate 1 + Y at omega
        auto card = make_cardinal_rig();
        auto hom = [](const Value& v) {
            return Value(Cardinal::finite(std::any_cast<std::uint64_t>(v)));
        };
        auto p = np(nat, {1, 1});
        auto v = poly_eval(p, hom, card, Value(Cardinal::inf()));
        CHECK(std::any_cast<Cardinal>(v) == Cardinal::inf());
    }
}

TEST_CASE("the polynomial rig and its derivation pass the law harness") {
    auto nat = make_nat_rig();
    auto inst = make_poly_rig(nat);
    CHECK(inst.name == "poly-nat");
    CHECK(all_passed(check_rig_laws(inst, 300, 10)));
    auto reports = check_derivation_laws(inst, make_poly_derivation(nat), 300, 10);
    for (const auto& r : reports) {
        CAPTURE(r.law);
        CHECK(r.status == LawStatus::Passed);
    }
}

TEST_CASE("differential polynomials") {
    SUBCASE("parse/render round trip") {
        for (const char* s : {"Y(0)", "Y(0)*Y(1)", "2*Y(1) + Y(0)*Y(0)", "0", "5"}) {
            auto dp = parse_diffpoly(s);
            CHECK(parse_diffpoly(render_diffpoly(dp)) == dp);
        }
        CHECK(render_diffpoly(parse_diffpoly("0")) == "0");
        CHECK_THROWS_AS(parse_diffpoly("Y(0"), Error);
        CHECK_THROWS_AS(parse_diffpoly("Z(0)"), Error);
    }
    SUBCASE("d(Y*Y') = Y*Y'' + Y'^2") {
        auto d = diffpoly_derive(parse_diffpoly("Y(0)*Y(1)"));
        CHECK(d == parse_diffpoly("Y(0)*Y(2) + Y(1)*Y(1)"));
    }
    SUBCASE("d^2(Y^2) = 2Y'^2 + 2YY''") {
        auto d2 = diffpoly_derive(diffpoly_derive(parse_diffpoly("Y(0)*Y(0)")));
        CHECK(d2 == parse_diffpoly("2*Y(1)*Y(1) + 2*Y(0)*Y(2)"));
    }
    SUBCASE("derivation is additive") {
        auto a = parse_diffpoly("Y(0)*Y(0) + 3*Y(2)");
        auto b = parse_diffpoly("Y(1)");
        CHECK(diffpoly_derive(dp_add(a, b)) ==
              dp_add(diffpoly_derive(a), diffpoly_derive(b)));
    }
    SUBCASE("order") {
        CHECK(diffpoly_order(parse_diffpoly("Y(0)*Y(3) + Y(1)")) == 3);
        CHECK(diffpoly_order(parse_diffpoly("7")) == 0);
    }
}

TEST_CASE("differential equations on cardinality sequences") {
    using species::CardSeq;
    auto ones = [](std::size_t n) {
        CardSeq s;
        s.coeffs.assign(n + 1, 1);
        return s;
    };
    SUBCASE("X = X' is solved by the all-ones sequence (sets)") {
        auto rep = dpe_check_solution(parse_diffpoly("Y(1)"), ones(9), 8);
        CHECK(rep.status == LawStatus::Passed);
    }
    SUBCASE("X = X' rejects the singleton sequence") {
        CardSeq x;
        x.coeffs = {0, 1, 0, 0, 0};
        auto rep = dpe_check_solution(parse_diffpoly("Y(1)"), x, 3);
        CHECK(rep.status == LawStatus::Failed);
        CHECK_FALSE(rep.counterexample.empty());
    }
    SUBCASE("X = 1 + X' fails for all-ones at index 0") {
        auto rep = dpe_check_solution(parse_diffpoly("1 + Y(1)"), ones(9), 8);
        CHECK(rep.status == LawStatus::Failed);
        REQUIRE(rep.counterexample.size() == 4);
        CHECK(rep.counterexample[1] == "index 0");
    }
    SUBCASE("insufficient truncation is an error, not silence") {
        CHECK_THROWS_AS(dpe_eval(parse_diffpoly("Y(2)"), ones(3), 3), Error);
    }
    SUBCASE("dpe_eval matches species arithmetic: Y(0)*Y(0) on E is E*E") {
        auto e = species::seq_of(species::parse_species("E"), 8);
        auto sq = dpe_eval(parse_diffpoly("Y(0)*Y(0)"), e, 8);
        CHECK(sq == species::seq_of(species::parse_species("E*E"), 8));
    }
    SUBCASE("second derivative agrees with the species double shift") {
        // evaluating Y(2) at a candidate is the double left shift
        auto e = species::seq_of(species::parse_species("E o (X*X)"), 10);
        auto d2 = dpe_eval(parse_diffpoly("Y(2)"), e, 8);
        auto direct = species::seq_of(
            species::parse_species("(E o (X*X))''"), 8);
        CHECK(d2 == direct);
    }
}
