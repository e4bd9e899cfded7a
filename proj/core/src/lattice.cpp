#include "drig/lattice.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace drig::lattice {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::size_t, std::size_t>>& covers)
    : names_(std::move(elements)) {
    std::size_t n = names_.size();
    if (n > 12) throw Error("poset: at most 12 elements supported");
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto [a, b] : covers) {
        if (a >= n || b >= n) throw Error("poset: cover index out of range");
        le[a][b] = true;
    }
    // Warshall transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (le[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (le[k][j]) le[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (le[i][j] && le[j][i])
                throw Error("poset: antisymmetry violated between '" +
                            names_[i] + "' and '" + names_[j] + "'");
    below_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (le[b][a]) below_[a] |= std::uint32_t{1} << b;
}

std::optional<std::size_t> Poset::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool Poset::leq(std::size_t a, std::size_t b) const {
    return (below_[b] >> a) & 1u;
}

namespace {

bool is_down_closed(const Poset& p, std::uint32_t mask) {
    for (std::size_t a = 0; a < p.size(); ++a)
        if ((mask >> a) & 1u)
            if ((p.below(a) & mask) != p.below(a)) return false;
    return true;
}

void require_same_poset(const DownSet& a, const DownSet& b) {
    if (a.poset != b.poset) throw Error("downset: poset mismatch");
}

}  // namespace

DownSet make_downset(const PosetPtr& p, std::uint32_t mask) {
    if (!is_down_closed(*p, mask))
        throw Error("downset: subset is not down-closed");
    return DownSet{p, mask};
}

DownSet bottom(const PosetPtr& p) { return DownSet{p, 0}; }

DownSet top(const PosetPtr& p) {
    return DownSet{p, p->size() == 0
                          ? 0
                          : (std::uint32_t{1} << p->size()) - 1};
}

std::string render_downset(const DownSet& s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < s.poset->size(); ++i)
        if ((s.mask >> i) & 1u) {
            if (!first) out += ",";
            first = false;
            out += s.poset->names()[i];
        }
    return out + "}";
}

std::vector<DownSet> downsets(const PosetPtr& p) {
    std::vector<DownSet> out;
    std::uint32_t full = p->size() == 0 ? 0 : (std::uint32_t{1} << p->size());
    for (std::uint32_t mask = 0; mask < std::max<std::uint32_t>(full, 1); ++mask)
        if (is_down_closed(*p, mask)) out.push_back(DownSet{p, mask});
    if (p->size() == 0) out = {DownSet{p, 0}};
    return out;
}

DownSet join(const DownSet& a, const DownSet& b) {
    require_same_poset(a, b);
    return DownSet{a.poset, a.mask | b.mask};
}

DownSet meet(const DownSet& a, const DownSet& b) {
    require_same_poset(a, b);
    return DownSet{a.poset, a.mask & b.mask};
}

std::uint32_t down_closure(const Poset& p, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        if ((mask >> a) & 1u) out |= p.below(a);
    return out;
}

DownSet cosubtract(const DownSet& y, const DownSet& x) {
    require_same_poset(y, x);
    return DownSet{y.poset, down_closure(*y.poset, y.mask & ~x.mask)};
}

DownSet cosubtract_bruteforce(const DownSet& y, const DownSet& x) {
    require_same_poset(y, x);
    std::optional<DownSet> best;
    for (const auto& z : downsets(y.poset)) {
        if ((y.mask & ~(x.mask | z.mask)) != 0) continue;  // y <= x v z fails
        if (!best || std::popcount(z.mask) < std::popcount(best->mask))
            best = z;
    }
    return *best;  // z = top always qualifies
}

DownSet conot(const DownSet& x) { return cosubtract(top(x.poset), x); }

DownSet boundary(const DownSet& x) { return meet(x, conot(x)); }

LawReport check_leibniz_boundary(const PosetPtr& p) {
    LawReport rep;
    rep.instance = "downsets";
    rep.law = "boundary-leibniz";
    auto carrier = downsets(p);
    for (const auto& a : carrier)
        for (const auto& b : carrier) {
            ++rep.samples;
            DownSet lhs = boundary(meet(a, b));
            DownSet rhs = join(meet(boundary(a), b), meet(a, boundary(b)));
            if (!(lhs == rhs)) {
                rep.status = LawStatus::Failed;
                rep.counterexample = {render_downset(a), render_downset(b)};
                rep.witness = {a, b};
                return rep;
            }
        }
    return rep;
}

std::optional<std::pair<DownSet, DownSet>> find_linearity_counterexample(
    const PosetPtr& p) {
    auto carrier = downsets(p);
    for (const auto& a : carrier)
        for (const auto& b : carrier) {
            DownSet lhs = boundary(join(a, b));
            DownSet rhs = join(boundary(a), boundary(b));
            if (!(lhs == rhs)) return std::make_pair(a, b);
        }
    return std::nullopt;
}

PosetPtr parse_poset(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> cover_names;
    bool have_elements = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (tok == "elements:") {
            std::string name;
            while (ls >> name) elements.push_back(name);
            have_elements = true;
            continue;
        }
        std::string lt, rhs;
        if (!(ls >> lt >> rhs) || lt != "<")
            throw Error("poset parse error: expected 'a < b', got: " + line);
        cover_names.emplace_back(tok, rhs);
    }
    if (!have_elements) throw Error("poset parse error: missing 'elements:' line");
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    auto idx = [&](const std::string& n) -> std::size_t {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == n) return i;
        throw Error("poset parse error: unknown element '" + n + "'");
    };
    for (const auto& [a, b] : cover_names) covers.emplace_back(idx(a), idx(b));
    return std::make_shared<Poset>(std::move(elements), covers);
}

PosetPtr load_poset(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open poset file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_poset(buf.str());
}

PosetPtr random_poset(Rng& rng, std::size_t max_elems) {
    auto n = std::uniform_int_distribution<std::size_t>(1, max_elems)(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    // edges only from lower to higher index: acyclic by construction
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                covers.emplace_back(i, j);
    return std::make_shared<Poset>(std::move(names), covers);
}

RigInstance make_downset_rig(const PosetPtr& p) {
    RigInstance r;
    r.name = "downsets";
    auto carrier = downsets(p);
    r.sample = [carrier](Rng& rng) -> Value {
        auto i = std::uniform_int_distribution<std::size_t>(
            0, carrier.size() - 1)(rng);
        return carrier[i];
    };
    r.eq = [](const Value& a, const Value& b) {
        return std::any_cast<DownSet>(a) == std::any_cast<DownSet>(b);
    };
    r.zero = bottom(p);
    r.one = top(p);
    r.add = [](const Value& a, const Value& b) -> Value {
        return join(std::any_cast<DownSet>(a), std::any_cast<DownSet>(b));
    };
    r.mul = [](const Value& a, const Value& b) -> Value {
        return meet(std::any_cast<DownSet>(a), std::any_cast<DownSet>(b));
    };
    r.render = [](const Value& a) {
        return render_downset(std::any_cast<DownSet>(a));
    };
    std::vector<Value> cv;
    for (const auto& d : carrier) cv.emplace_back(d);
    r.finite_carrier = std::move(cv);
    return r;
}

DerivationDescriptor make_boundary_derivation() {
    DerivationDescriptor d;
    d.name = "boundary";
    d.expected_linear = false;
    d.d = [](const Value& a) -> Value {
        return boundary(std::any_cast<DownSet>(a));
    };
    return d;
}

}  // namespace drig::lattice
