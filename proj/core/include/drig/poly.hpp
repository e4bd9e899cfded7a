#ifndef DRIG_POLY_HPP
#define DRIG_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "drig/rig.hpp"
#include "drig/species.hpp"

namespace drig::poly {

/// Polynomial in Y with coefficients in a base rig; coeffs[i] is the
/// coefficient of Y^i. Canonical form strips trailing base-zeros.
struct Poly {
    const RigInstance* base = nullptr;
    std::vector<Value> coeffs;
};

Poly make_poly(const RigInstance& base, std::vector<Value> coeffs);
Poly poly_zero(const RigInstance& base);
Poly poly_one(const RigInstance& base);

/// degree; -1 for the zero polynomial.
int poly_degree(const Poly& p);

bool poly_eq(const Poly& p, const Poly& q);
std::string render_poly(const Poly& p);

Poly poly_add(const Poly& p, const Poly& q);
/// Cauchy product: c_k = sum_{i+j=k} a_i b_j in the base rig.
Poly poly_mul(const Poly& p, const Poly& q);

/// The derivation generated by d(Y) = 1 over a base derivation
/// (trivial when absent): d(sum A_i Y^i) = sum (dA_i Y^i + i A_i Y^{i-1}).
Poly poly_derive(const Poly& p, const DerivationDescriptor* base_d = nullptr);

/// Evaluation along a rig map `hom` from the base into `target` at the
/// element e: sum hom(A_i) e^i. The universal property of C[Y].
Value poly_eval(const Poly& p,
                const std::function<Value(const Value&)>& hom,
                const RigInstance& target, const Value& e);

/// The rig of polynomials over `base`, registered for the law harness.
RigInstance make_poly_rig(const RigInstance& base);
DerivationDescriptor make_poly_derivation(const RigInstance& base);

// -------------------------------------------------------------------------
// Differential polynomials: monomials are multisets over Y(0), Y(1), ...
// with natural-number coefficients; the derivation sends Y(i) to Y(i+1)
// and extends by linearity and Leibniz.

/// variable order -> exponent; empty map is the constant monomial.
using Monomial = std::map<unsigned, unsigned>;

struct DiffPoly {
    std::map<Monomial, species::BigInt> terms;  // no zero coefficients

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;
};

DiffPoly dp_add(const DiffPoly& a, const DiffPoly& b);
DiffPoly diffpoly_derive(const DiffPoly& dp);

/// Grammar: terms `c * Y(i1)*Y(i2)*...` joined by `+`; a term may be a
/// bare constant or omit the leading coefficient.
DiffPoly parse_diffpoly(std::string_view text);
std::string render_diffpoly(const DiffPoly& dp);

/// Highest derivative order appearing in dp (0 when none).
unsigned diffpoly_order(const DiffPoly& dp);

/// Evaluates dp with Y(i) := shift^i(candidate) in the cardinality-
/// sequence rig, truncated at n. candidate.truncation() must be at
/// least n + diffpoly_order(dp).
species::CardSeq dpe_eval(const DiffPoly& dp, const species::CardSeq& candidate,
                          std::size_t n);

/// Checks whether `candidate` is a fixed point of the equation
/// X = dp(X, X', ...), coefficientwise up to n.
LawReport dpe_check_solution(const DiffPoly& dp,
                             const species::CardSeq& candidate, std::size_t n);

}  // namespace drig::poly

#endif
