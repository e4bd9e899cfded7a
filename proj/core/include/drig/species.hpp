#ifndef DRIG_SPECIES_HPP
#define DRIG_SPECIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "drig/rig.hpp"

namespace drig::species {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Truncated cardinality sequence: coeffs[n] = number of labeled
/// structures on an n-element set, exactly. Truncation = size - 1.
struct CardSeq {
    std::vector<BigInt> coeffs;

    std::size_t truncation() const { return coeffs.size() - 1; }
    friend bool operator==(const CardSeq&, const CardSeq&) = default;
};

std::string render_cardseq(const CardSeq& s);

// Truncated operations: the result truncation is the smaller operand
// truncation (all consulted indices exist; nothing is fabricated).
CardSeq cs_add(const CardSeq& a, const CardSeq& b);
/// Binomial convolution (f g)_n = sum_k C(n,k) f_k g_{n-k}.
CardSeq cs_mul(const CardSeq& a, const CardSeq& b);
/// Left shift c_n -> c_{n+1}; drops one index of truncation.
CardSeq cs_shift(const CardSeq& a);
/// Exponential composition over set partitions (partial Bell recurrence);
/// requires b.coeffs[0] == 0.
CardSeq cs_compose(const CardSeq& a, const CardSeq& b);
CardSeq cs_truncate(const CardSeq& a, std::size_t n);

BigInt binomial(std::size_t n, std::size_t k);

class SpeciesExpr {
public:
    enum class Kind { Zero, One, X, E, Sum, Prod, Comp, Deriv };

    static SpeciesExpr zero();
    static SpeciesExpr one();
    static SpeciesExpr x();
    static SpeciesExpr e();
    static SpeciesExpr sum(const SpeciesExpr& f, const SpeciesExpr& g);
    static SpeciesExpr prod(const SpeciesExpr& f, const SpeciesExpr& g);
    static SpeciesExpr comp(const SpeciesExpr& f, const SpeciesExpr& g);
    static SpeciesExpr derivative(const SpeciesExpr& f);

    Kind kind() const;
    SpeciesExpr left() const;
    SpeciesExpr right() const;
    SpeciesExpr inner() const;
    const void* id() const;  // node identity, for memo tables

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit SpeciesExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

/// Grammar: atoms `0 1 X E`, `+` (lowest), `*`, `o` (composition, binds
/// tighter than `*`), postfix `'` (tightest), parentheses.
SpeciesExpr parse_species(std::string_view text);
std::string print_species(const SpeciesExpr& f);

/// Cardinality sequence of the expression at truncation N. Derivative
/// nodes evaluate their operand at a deeper truncation, so shifted
/// tails are genuine. Throws on Comp whose right operand has
/// structures on the empty set.
CardSeq seq_of(const SpeciesExpr& f, std::size_t n);

/// Independent brute-force oracle: counts labeled structures on {1..n}
/// by explicit subset (Prod) and set-partition (Comp) enumeration;
/// Deriv adjoins a fresh star label.
BigInt count_structures(const SpeciesExpr& f, std::size_t n,
                        std::size_t cap = 7);

LawReport check_chain_rule(const SpeciesExpr& f, const SpeciesExpr& g,
                           std::size_t n);
LawReport check_power_rule(const SpeciesExpr& f, std::size_t power,
                           std::size_t n);
LawReport check_tuple_rule(const std::vector<SpeciesExpr>& fs, std::size_t n);
LawReport check_nfold_leibniz(const SpeciesExpr& f, const SpeciesExpr& g,
                              std::size_t order, std::size_t n);

/// Exponential generating series: coefficient of t^n is c_n / n!.
struct EgfSeries {
    std::vector<Rational> coeffs;

    std::string render() const;
    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;
};

EgfSeries chi_egf(const SpeciesExpr& f, std::size_t n);
EgfSeries egf_of(const CardSeq& s);
EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b);
/// Plain Cauchy product of power series.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);
/// Formal d/dt: c_n -> (n+1) c_{n+1}.
EgfSeries egf_derive(const EgfSeries& a);

/// Seeded generator; Comp right operands are forced to vanish at the
/// empty set (multiplied by X when needed).
SpeciesExpr random_species(Rng& rng, int depth);

/// Finitely supported cardinality sequences under binomial convolution,
/// registered as the "cardseq" rig; the shift derivation is exact here.
RigInstance make_cardseq_rig();
DerivationDescriptor make_shift_derivation();

/// Strips trailing zero coefficients (canonical finite-support form).
CardSeq fs_strip(CardSeq s);
CardSeq fs_add(const CardSeq& a, const CardSeq& b);
CardSeq fs_mul(const CardSeq& a, const CardSeq& b);

}  // namespace drig::species

#endif
