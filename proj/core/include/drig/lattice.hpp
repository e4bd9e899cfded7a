#ifndef DRIG_LATTICE_HPP
#define DRIG_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drig/rig.hpp"

namespace drig::lattice {

/// Finite poset given by cover relations; the order is their
/// reflexive-transitive closure. Antisymmetry is checked at build time.
class Poset {
public:
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<std::size_t, std::size_t>>& covers);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool leq(std::size_t a, std::size_t b) const;
    /// Bitmask of all elements <= a (the principal down-set).
    std::uint32_t below(std::size_t a) const { return below_[a]; }

private:
    std::vector<std::string> names_;
    std::vector<std::uint32_t> below_;
};

using PosetPtr = std::shared_ptr<const Poset>;

/// Down-closed subset of a poset, as a membership bitmask. Elements of
/// the co-Heyting algebra of down-sets: meet = intersection, join =
/// union, bottom = empty, top = everything.
struct DownSet {
    PosetPtr poset;
    std::uint32_t mask = 0;

    friend bool operator==(const DownSet& a, const DownSet& b) {
        return a.poset == b.poset && a.mask == b.mask;
    }
};

DownSet make_downset(const PosetPtr& p, std::uint32_t mask);  // validates
DownSet bottom(const PosetPtr& p);
DownSet top(const PosetPtr& p);
std::string render_downset(const DownSet& s);

/// All down-closed subsets (requires |elements| <= 12).
std::vector<DownSet> downsets(const PosetPtr& p);

DownSet join(const DownSet& a, const DownSet& b);
DownSet meet(const DownSet& a, const DownSet& b);

/// Down-closure of an arbitrary subset mask.
std::uint32_t down_closure(const Poset& p, std::uint32_t mask);

/// y \ x: the least down-set z with y <= x v z (left adjoint to join).
/// Computed in closed form as the down-closure of y minus x.
DownSet cosubtract(const DownSet& y, const DownSet& x);

/// Brute-force adjointness oracle: the inclusion-least z over the full
/// carrier with y <= x v z. Test-side counterpart of cosubtract.
DownSet cosubtract_bruteforce(const DownSet& y, const DownSet& x);

/// co-not: top \ x, the smallest complement-like element with
/// x v conot(x) = top.
DownSet conot(const DownSet& x);

/// Boundary: x ^ conot(x). Satisfies Leibniz for meet but not
/// linearity for join.
DownSet boundary(const DownSet& x);

/// Exhaustive check of d(a ^ b) = (da ^ b) v (a ^ db) over all pairs.
LawReport check_leibniz_boundary(const PosetPtr& p);

/// First pair (in enumeration order) with
/// boundary(a v b) != boundary(a) v boundary(b), if any.
std::optional<std::pair<DownSet, DownSet>> find_linearity_counterexample(
    const PosetPtr& p);

/// File format: line `elements: a b c`, then cover lines `a < b`.
PosetPtr parse_poset(std::string_view text);
PosetPtr load_poset(const std::string& path);

/// Seeded random DAG on <= max_elems nodes, transitively closed.
PosetPtr random_poset(Rng& rng, std::size_t max_elems = 5);

/// The down-set lattice as a rig: add = union, mul = intersection.
RigInstance make_downset_rig(const PosetPtr& p);
/// The boundary operator, declared Leibniz-only (expected_linear=false).
DerivationDescriptor make_boundary_derivation();

}  // namespace drig::lattice

#endif
