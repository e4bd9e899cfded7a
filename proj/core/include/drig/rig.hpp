#ifndef DRIG_RIG_HPP
#define DRIG_RIG_HPP

#include <any>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace drig {

/// Type-erased carrier element. Each RigInstance knows how to interpret
/// the values it produces; the harness only moves them around.
using Value = std::any;

using Rng = std::mt19937_64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runtime descriptor of a rig: carrier sampler, canonical equality
/// (standing for isomorphism in the skeletal instances), and the two
/// monoid structures. `finite_carrier`, when present, enables exhaustive
/// checks and the self-similarity searches.
struct RigInstance {
    std::string name;
    std::function<Value(Rng&)> sample;
    std::function<bool(const Value&, const Value&)> eq;
    Value zero;
    std::function<Value(const Value&, const Value&)> add;
    Value one;
    std::function<Value(const Value&, const Value&)> mul;
    std::function<std::string(const Value&)> render;
    std::optional<std::vector<Value>> finite_carrier;
};

/// An operator claimed to be a derivation of the instance. `twist`
/// absent means the Leibniz rule is checked untwisted (gamma = id).
/// `expected_linear = false` declares an operator that satisfies only
/// the Leibniz clause (the lattice boundary); linearity is then
/// reported as "not-claimed" instead of failed.
struct DerivationDescriptor {
    std::string name;
    std::function<Value(const Value&)> d;
    std::function<Value(const Value&)> twist;  // null -> identity
    bool expected_linear = true;
};

enum class LawStatus { Passed, Failed, NotClaimed, PreconditionUnmet };

struct LawReport {
    std::string instance;
    std::string law;
    LawStatus status = LawStatus::Passed;
    std::size_t samples = 0;
    std::vector<std::string> counterexample;  // rendered, empty unless found
    std::vector<Value> witness;               // raw elements, for replay

    bool failed() const { return status == LawStatus::Failed; }
};

/// A single equational law: predicate over `arity` carrier elements.
struct Law {
    std::string name;
    int arity;
    std::function<bool(const RigInstance&, const std::vector<Value>&)> pred;
};

/// The ten rig laws: add-assoc, add-comm, add-unit, mul-assoc,
/// mul-unit-left, mul-unit-right, distrib-left, distrib-right,
/// annihilate-left, annihilate-right.
std::vector<Law> rig_laws();

/// The derivation laws for a given descriptor: d-zero, linearity,
/// twisted-leibniz (gamma defaulting to identity).
std::vector<Law> derivation_laws(const DerivationDescriptor& d);

std::vector<LawReport> check_rig_laws(const RigInstance& inst,
                                      std::size_t n_samples, std::uint64_t seed);

std::vector<LawReport> check_derivation_laws(const RigInstance& inst,
                                             const DerivationDescriptor& d,
                                             std::size_t n_samples,
                                             std::uint64_t seed);

/// Checks a single law, exhaustively when the carrier permits, else on
/// seeded samples. Used by the check_* drivers and by replay tests.
LawReport check_law(const RigInstance& inst, const Law& law,
                    std::size_t n_samples, std::uint64_t seed);

struct SelfSimilarResult {
    std::vector<Value> elements;  // all a with a + a ~ a
    bool taut = false;            // true iff elements == {zero}
};

/// Enumerates { a | a + a ~ a } over the finite carrier. The instance
/// is taut exactly when only zero is self-similar.
SelfSimilarResult find_self_similar(const RigInstance& inst);

/// An additive map to the naturals reflecting zero; its existence
/// forces tautness.
struct DimensionHom {
    std::function<std::uint64_t(const Value&)> dim;
};

/// First validates the dimension invariants on samples (additivity,
/// dim(zero)=0, reflection), then checks that every self-similar sample
/// is zero. A dimension-invariant violation is its own failure.
LawReport is_taut_via_dimension(const RigInstance& inst, const DimensionHom& dim,
                                std::size_t n_samples, std::uint64_t seed = 0);

/// d(1) must be additively idempotent: d(1) + d(1) ~ d(1).
LawReport derivation_unit_report(const RigInstance& inst,
                                 const DerivationDescriptor& d);

/// Enumerates the fixed points { a | d(a) ~ a } over the finite carrier.
std::vector<Value> napier_search(const RigInstance& inst,
                                 const DerivationDescriptor& d);

struct DerivationChain {
    std::vector<Value> values;  // start, d(start), d^2(start), ...
    std::optional<std::size_t> stabilized_at;
};

/// Iterates d from `start`, stopping at the first index i with
/// chain[i+1] ~ chain[i]; at most max_steps applications of d.
DerivationChain iterate_derivation_chain(const RigInstance& inst,
                                         const DerivationDescriptor& d,
                                         const Value& start,
                                         std::size_t max_steps);

/// Renders reports as the versioned JSON array:
///   [{ "schema": 1, "instance", "law", "status", "passed", "samples",
///      "counterexample": [..] | null }, ...]
std::string reports_to_json(const std::vector<LawReport>& reports);

std::string status_name(LawStatus s);

/// n-fold add of a with itself; n = 0 gives zero.
Value nfold_add(const RigInstance& inst, std::size_t n, const Value& a);

bool all_passed(const std::vector<LawReport>& reports);

}  // namespace drig

#endif
