#include "drig/species.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace drig::species {

std::string render_cardseq(const CardSeq& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (i) out += ",";
        out += s.coeffs[i].str();
    }
    return out + "]";
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    // Pascal recurrence, exact.
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = std::min(i, n); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

CardSeq cs_add(const CardSeq& a, const CardSeq& b) {
    std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    CardSeq out;
    out.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

CardSeq cs_mul(const CardSeq& a, const CardSeq& b) {
    std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    CardSeq out;
    out.coeffs.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k)
            out.coeffs[i] += binomial(i, k) * a.coeffs[k] * b.coeffs[i - k];
    return out;
}

CardSeq cs_shift(const CardSeq& a) {
    if (a.coeffs.size() < 2)
        throw Error("cs_shift: truncation too small for a genuine tail");
    CardSeq out;
    out.coeffs.assign(a.coeffs.begin() + 1, a.coeffs.end());
    return out;
}

CardSeq cs_compose(const CardSeq& a, const CardSeq& b) {
    if (b.coeffs.empty() || b.coeffs[0] != 0)
        throw Error("composition undefined at empty set");
    std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    // Partial Bell numbers B[m][k] for labeled block structure counts:
    // B[m][k] = sum_j C(m-1, j-1) b_j B[m-j][k-1].
    std::vector<std::vector<BigInt>> bell(n, std::vector<BigInt>(n, 0));
    bell[0][0] = 1;
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t k = 1; k <= m; ++k)
            for (std::size_t j = 1; j + (k - 1) <= m; ++j) {
                if (j >= b.coeffs.size()) break;
                bell[m][k] += binomial(m - 1, j - 1) * b.coeffs[j] * bell[m - j][k - 1];
            }
    CardSeq out;
    out.coeffs.assign(n, 0);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k <= m; ++k)
            out.coeffs[m] += a.coeffs[k] * bell[m][k];
    return out;
}

CardSeq cs_truncate(const CardSeq& a, std::size_t n) {
    if (a.coeffs.size() < n + 1)
        throw Error("cs_truncate: insufficient truncation");
    CardSeq out;
    out.coeffs.assign(a.coeffs.begin(), a.coeffs.begin() + n + 1);
    return out;
}

// ------------------------------------------------------------ expressions

struct SpeciesExpr::Node {
    Kind kind;
    std::shared_ptr<const Node> l, r;
};

SpeciesExpr::Kind SpeciesExpr::kind() const { return node_->kind; }
SpeciesExpr SpeciesExpr::left() const { return SpeciesExpr{node_->l}; }
SpeciesExpr SpeciesExpr::right() const { return SpeciesExpr{node_->r}; }
SpeciesExpr SpeciesExpr::inner() const { return SpeciesExpr{node_->l}; }
const void* SpeciesExpr::id() const { return node_.get(); }

SpeciesExpr SpeciesExpr::zero() { return SpeciesExpr{std::make_shared<Node>(Node{Kind::Zero})}; }
SpeciesExpr SpeciesExpr::one() { return SpeciesExpr{std::make_shared<Node>(Node{Kind::One})}; }
SpeciesExpr SpeciesExpr::x() { return SpeciesExpr{std::make_shared<Node>(Node{Kind::X})}; }
SpeciesExpr SpeciesExpr::e() { return SpeciesExpr{std::make_shared<Node>(Node{Kind::E})}; }

SpeciesExpr SpeciesExpr::sum(const SpeciesExpr& f, const SpeciesExpr& g) {
    return SpeciesExpr{std::make_shared<Node>(Node{Kind::Sum, f.node_, g.node_})};
}
SpeciesExpr SpeciesExpr::prod(const SpeciesExpr& f, const SpeciesExpr& g) {
    return SpeciesExpr{std::make_shared<Node>(Node{Kind::Prod, f.node_, g.node_})};
}
SpeciesExpr SpeciesExpr::comp(const SpeciesExpr& f, const SpeciesExpr& g) {
    return SpeciesExpr{std::make_shared<Node>(Node{Kind::Comp, f.node_, g.node_})};
}
SpeciesExpr SpeciesExpr::derivative(const SpeciesExpr& f) {
    return SpeciesExpr{std::make_shared<Node>(Node{Kind::Deriv, f.node_})};
}

namespace {

class SpeciesParser {
public:
    explicit SpeciesParser(std::string_view t) : text_(t) {}

    SpeciesExpr parse() {
        SpeciesExpr f = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw Error("species parse error at position " + std::to_string(pos_));
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    SpeciesExpr sum() {
        SpeciesExpr f = prod();
        while (eat('+')) f = SpeciesExpr::sum(f, prod());
        return f;
    }
    SpeciesExpr prod() {
        SpeciesExpr f = comp();
        while (eat('*')) f = SpeciesExpr::prod(f, comp());
        return f;
    }
    SpeciesExpr comp() {
        SpeciesExpr f = post();
        while (eat('o')) f = SpeciesExpr::comp(f, post());
        return f;
    }
    SpeciesExpr post() {
        SpeciesExpr f = primary();
        while (eat('\'')) f = SpeciesExpr::derivative(f);
        return f;
    }
    SpeciesExpr primary() {
        skip_ws();
        if (pos_ >= text_.size())
            throw Error("species parse error: unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            SpeciesExpr f = sum();
            if (!eat(')')) throw Error("species parse error: unmatched '('");
            return f;
        }
        ++pos_;
        switch (c) {
            case '0': return SpeciesExpr::zero();
            case '1': return SpeciesExpr::one();
            case 'X': return SpeciesExpr::x();
            case 'E': return SpeciesExpr::e();
        }
        throw Error(std::string("species parse error: unexpected '") + c +
                    "' at position " + std::to_string(pos_ - 1));
    }
};

void print_species_rec(const SpeciesExpr& f, int prec, std::string& out) {
    switch (f.kind()) {
        case SpeciesExpr::Kind::Zero: out += '0'; return;
        case SpeciesExpr::Kind::One: out += '1'; return;
        case SpeciesExpr::Kind::X: out += 'X'; return;
        case SpeciesExpr::Kind::E: out += 'E'; return;
        case SpeciesExpr::Kind::Sum: {
            bool paren = prec > 0;
            if (paren) out += '(';
            print_species_rec(f.left(), 0, out);
            out += " + ";
            print_species_rec(f.right(), 1, out);
            if (paren) out += ')';
            return;
        }
        case SpeciesExpr::Kind::Prod: {
            bool paren = prec > 1;
            if (paren) out += '(';
            print_species_rec(f.left(), 1, out);
            out += '*';
            print_species_rec(f.right(), 2, out);
            if (paren) out += ')';
            return;
        }
        case SpeciesExpr::Kind::Comp: {
            bool paren = prec > 2;
            if (paren) out += '(';
            print_species_rec(f.left(), 2, out);
            out += " o ";
            print_species_rec(f.right(), 3, out);
            if (paren) out += ')';
            return;
        }
        case SpeciesExpr::Kind::Deriv:
            print_species_rec(f.inner(), 3, out);
            out += '\'';
            return;
    }
}

}  // namespace

SpeciesExpr parse_species(std::string_view text) {
    return SpeciesParser(text).parse();
}

std::string print_species(const SpeciesExpr& f) {
    std::string out;
    print_species_rec(f, 0, out);
    return out;
}

// ------------------------------------------------------------- evaluation

namespace {

CardSeq eval_seq(const SpeciesExpr& f, std::size_t n) {
    CardSeq out;
    switch (f.kind()) {
        case SpeciesExpr::Kind::Zero:
            out.coeffs.assign(n + 1, 0);
            return out;
        case SpeciesExpr::Kind::One:
            out.coeffs.assign(n + 1, 0);
            out.coeffs[0] = 1;
            return out;
        case SpeciesExpr::Kind::X:
            out.coeffs.assign(n + 1, 0);
            if (n >= 1) out.coeffs[1] = 1;
            return out;
        case SpeciesExpr::Kind::E:
            out.coeffs.assign(n + 1, 1);
            return out;
        case SpeciesExpr::Kind::Sum:
            return cs_add(eval_seq(f.left(), n), eval_seq(f.right(), n));
        case SpeciesExpr::Kind::Prod:
            return cs_mul(eval_seq(f.left(), n), eval_seq(f.right(), n));
        case SpeciesExpr::Kind::Comp:
            return cs_compose(eval_seq(f.left(), n), eval_seq(f.right(), n));
        case SpeciesExpr::Kind::Deriv:
            // one extra index of precision so the shifted tail is genuine
            return cs_shift(eval_seq(f.inner(), n + 1));
    }
    throw Error("eval_seq: unreachable");
}

using Memo = std::map<std::pair<const void*, std::size_t>, BigInt>;

BigInt count_impl(const SpeciesExpr& f, std::size_t n, Memo& memo);

// Sum over set partitions of an n-set, built by inserting elements one
// at a time into existing or fresh blocks; per partition the weight is
// f(#blocks) * prod_B g(|B|).
BigInt partition_sum(const SpeciesExpr& f, const SpeciesExpr& g, std::size_t n,
                     Memo& memo) {
    BigInt total = 0;
    std::vector<std::size_t> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            BigInt w = count_impl(f, blocks.size(), memo);
            for (std::size_t b : blocks) w *= count_impl(g, b, memo);
            total += w;
            return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            ++blocks[k];
            rec(i + 1);
            --blocks[k];
        }
        blocks.push_back(1);
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return total;
}

BigInt count_impl(const SpeciesExpr& f, std::size_t n, Memo& memo) {
    auto key = std::make_pair(f.id(), n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt result = 0;
    switch (f.kind()) {
        case SpeciesExpr::Kind::Zero: result = 0; break;
        case SpeciesExpr::Kind::One: result = n == 0 ? 1 : 0; break;
        case SpeciesExpr::Kind::X: result = n == 1 ? 1 : 0; break;
        case SpeciesExpr::Kind::E: result = 1; break;
        case SpeciesExpr::Kind::Sum:
            result = count_impl(f.left(), n, memo) + count_impl(f.right(), n, memo);
            break;
        case SpeciesExpr::Kind::Prod: {
            // explicit subset split of the label set
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
                result += count_impl(f.left(), k, memo) *
                          count_impl(f.right(), n - k, memo);
            }
            break;
        }
        case SpeciesExpr::Kind::Comp:
            if (count_impl(f.right(), 0, memo) != 0)
                throw Error("composition undefined at empty set");
            result = partition_sum(f.left(), f.right(), n, memo);
            break;
        case SpeciesExpr::Kind::Deriv:
            // structures on the label set plus a fresh star label
            result = count_impl(f.inner(), n + 1, memo);
            break;
    }
    memo.emplace(key, result);
    return result;
}

}  // namespace

CardSeq seq_of(const SpeciesExpr& f, std::size_t n) { return eval_seq(f, n); }

BigInt count_structures(const SpeciesExpr& f, std::size_t n, std::size_t cap) {
    if (n > cap)
        throw Error("count_structures: size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap));
    Memo memo;
    return count_impl(f, n, memo);
}

// -------------------------------------------------------------- law checks

namespace {

LawReport seq_report(const std::string& law, const CardSeq& lhs,
                     const CardSeq& rhs, std::vector<std::string> context) {
    LawReport rep;
    rep.instance = "species";
    rep.law = law;
    rep.samples = 1;
    if (!(lhs == rhs)) {
        rep.status = LawStatus::Failed;
        context.push_back("lhs=" + render_cardseq(lhs));
        context.push_back("rhs=" + render_cardseq(rhs));
        rep.counterexample = std::move(context);
        for (const auto& c : rep.counterexample) rep.witness.emplace_back(c);
    }
    return rep;
}

SpeciesExpr pow_expr(const SpeciesExpr& f, std::size_t n) {
    SpeciesExpr acc = SpeciesExpr::one();
    for (std::size_t i = 0; i < n; ++i) acc = SpeciesExpr::prod(acc, f);
    return acc;
}

SpeciesExpr nsum_expr(std::size_t n, const SpeciesExpr& f) {
    SpeciesExpr acc = SpeciesExpr::zero();
    for (std::size_t i = 0; i < n; ++i) acc = SpeciesExpr::sum(acc, f);
    return acc;
}

SpeciesExpr nderiv_expr(const SpeciesExpr& f, std::size_t n) {
    SpeciesExpr acc = f;
    for (std::size_t i = 0; i < n; ++i) acc = SpeciesExpr::derivative(acc);
    return acc;
}

}  // namespace

LawReport check_chain_rule(const SpeciesExpr& f, const SpeciesExpr& g,
                           std::size_t n) {
    auto lhs = seq_of(SpeciesExpr::derivative(SpeciesExpr::comp(f, g)), n);
    auto rhs = seq_of(
        SpeciesExpr::prod(SpeciesExpr::comp(SpeciesExpr::derivative(f), g),
                          SpeciesExpr::derivative(g)),
        n);
    return seq_report("chain-rule", lhs, rhs,
                      {"f=" + print_species(f), "g=" + print_species(g)});
}

LawReport check_power_rule(const SpeciesExpr& f, std::size_t power,
                           std::size_t n) {
    if (power < 1) throw Error("check_power_rule: power must be >= 1");
    auto lhs = seq_of(SpeciesExpr::derivative(pow_expr(f, power)), n);
    auto rhs = seq_of(
        nsum_expr(power, SpeciesExpr::prod(pow_expr(f, power - 1),
                                           SpeciesExpr::derivative(f))),
        n);
    return seq_report("power-rule", lhs, rhs,
                      {"f=" + print_species(f), "n=" + std::to_string(power)});
}

LawReport check_tuple_rule(const std::vector<SpeciesExpr>& fs, std::size_t n) {
    if (fs.empty()) throw Error("check_tuple_rule: empty factor list");
    SpeciesExpr prod_all = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i)
        prod_all = SpeciesExpr::prod(prod_all, fs[i]);
    SpeciesExpr rhs_expr = SpeciesExpr::zero();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        SpeciesExpr term = i == 0 ? SpeciesExpr::derivative(fs[0]) : fs[0];
        for (std::size_t j = 1; j < fs.size(); ++j)
            term = SpeciesExpr::prod(
                term, j == i ? SpeciesExpr::derivative(fs[j]) : fs[j]);
        rhs_expr = SpeciesExpr::sum(rhs_expr, term);
    }
    auto lhs = seq_of(SpeciesExpr::derivative(prod_all), n);
    auto rhs = seq_of(rhs_expr, n);
    std::string ctx = "fs=[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) ctx += ", ";
        ctx += print_species(fs[i]);
    }
    return seq_report("tuple-rule", lhs, rhs, {ctx + "]"});
}

LawReport check_nfold_leibniz(const SpeciesExpr& f, const SpeciesExpr& g,
                              std::size_t order, std::size_t n) {
    auto lhs = seq_of(nderiv_expr(SpeciesExpr::prod(f, g), order), n);
    CardSeq rhs;
    rhs.coeffs.assign(n + 1, 0);
    for (std::size_t k = 0; k <= order; ++k) {
        auto term = seq_of(
            SpeciesExpr::prod(nderiv_expr(f, order - k), nderiv_expr(g, k)), n);
        BigInt coeff = binomial(order, k);
        for (std::size_t i = 0; i <= n; ++i)
            rhs.coeffs[i] += coeff * term.coeffs[i];
    }
    return seq_report("nfold-leibniz", lhs, rhs,
                      {"f=" + print_species(f), "g=" + print_species(g),
                       "n=" + std::to_string(order)});
}

// --------------------------------------------------------------------- EGF

EgfSeries egf_of(const CardSeq& s) {
    EgfSeries out;
    out.coeffs.resize(s.coeffs.size());
    BigInt fact = 1;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (i) fact *= static_cast<unsigned>(i);
        out.coeffs[i] = Rational(s.coeffs[i], fact);
    }
    return out;
}

EgfSeries chi_egf(const SpeciesExpr& f, std::size_t n) {
    return egf_of(seq_of(f, n));
}

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b) {
    std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    EgfSeries out;
    out.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
    std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    EgfSeries out;
    out.coeffs.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k)
            out.coeffs[i] += a.coeffs[k] * b.coeffs[i - k];
    return out;
}

EgfSeries egf_derive(const EgfSeries& a) {
    if (a.coeffs.empty()) return a;
    EgfSeries out;
    out.coeffs.resize(a.coeffs.size() - 1);
    for (std::size_t i = 0; i + 1 < a.coeffs.size(); ++i)
        out.coeffs[i] = Rational(static_cast<unsigned>(i + 1)) * a.coeffs[i + 1];
    return out;
}

std::string EgfSeries::render() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs[i].str();
        if (i == 0) {
            out += c;
        } else {
            std::string t = i == 1 ? "t" : "t^" + std::to_string(i);
            out += c == "1" ? t : c + " " + t;
        }
    }
    return out.empty() ? "0" : out;
}

// -------------------------------------------------------------- generators

SpeciesExpr random_species(Rng& rng, int depth) {
    auto leaf = [&rng] {
        int roll = std::uniform_int_distribution<int>(0, 9)(rng);
        if (roll < 4) return SpeciesExpr::x();
        if (roll < 7) return SpeciesExpr::e();
        if (roll < 9) return SpeciesExpr::one();
        return SpeciesExpr::zero();
    };
    if (depth <= 0) return leaf();
    int roll = std::uniform_int_distribution<int>(0, 99)(rng);
    if (roll < 25)
        return SpeciesExpr::sum(random_species(rng, depth - 1),
                                random_species(rng, depth - 1));
    if (roll < 50)
        return SpeciesExpr::prod(random_species(rng, depth - 1),
                                 random_species(rng, depth - 1));
    if (roll < 70) {
        SpeciesExpr f = random_species(rng, depth - 1);
        SpeciesExpr g = random_species(rng, depth - 1);
        if (seq_of(g, 0).coeffs[0] != 0) g = SpeciesExpr::prod(SpeciesExpr::x(), g);
        return SpeciesExpr::comp(f, g);
    }
    if (roll < 85) return SpeciesExpr::derivative(random_species(rng, depth - 1));
    return leaf();
}

// --------------------------------------------- finite-support rig instance

CardSeq fs_strip(CardSeq s) {
    while (!s.coeffs.empty() && s.coeffs.back() == 0) s.coeffs.pop_back();
    return s;
}

CardSeq fs_add(const CardSeq& a, const CardSeq& b) {
    CardSeq out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return fs_strip(std::move(out));
}

CardSeq fs_mul(const CardSeq& a, const CardSeq& b) {
    CardSeq out;
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += binomial(i + j, i) * a.coeffs[i] * b.coeffs[j];
    return fs_strip(std::move(out));
}

RigInstance make_cardseq_rig() {
    RigInstance r;
    r.name = "cardseq";
    r.sample = [](Rng& rng) -> Value {
        CardSeq s;
        auto len = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        for (std::size_t i = 0; i < len; ++i)
            s.coeffs.emplace_back(
                std::uniform_int_distribution<int>(0, 3)(rng));
        return fs_strip(std::move(s));
    };
    r.eq = [](const Value& a, const Value& b) {
        return std::any_cast<CardSeq>(a) == std::any_cast<CardSeq>(b);
    };
    r.zero = CardSeq{};
    r.one = CardSeq{{BigInt(1)}};
    r.add = [](const Value& a, const Value& b) -> Value {
        return fs_add(std::any_cast<CardSeq>(a), std::any_cast<CardSeq>(b));
    };
    r.mul = [](const Value& a, const Value& b) -> Value {
        return fs_mul(std::any_cast<CardSeq>(a), std::any_cast<CardSeq>(b));
    };
    r.render = [](const Value& a) {
        return render_cardseq(std::any_cast<CardSeq>(a));
    };
    // all stripped sequences of support <= 3 with entries <= 2
    std::vector<Value> carrier;
    for (int c0 = 0; c0 <= 2; ++c0)
        for (int c1 = 0; c1 <= 2; ++c1)
            for (int c2 = 0; c2 <= 2; ++c2) {
                CardSeq s;
                s.coeffs = {BigInt(c0), BigInt(c1), BigInt(c2)};
                s = fs_strip(std::move(s));
                bool seen = false;
                for (const auto& v : carrier)
                    if (std::any_cast<CardSeq>(v) == s) { seen = true; break; }
                if (!seen) carrier.emplace_back(std::move(s));
            }
    r.finite_carrier = std::move(carrier);
    return r;
}

DerivationDescriptor make_shift_derivation() {
    DerivationDescriptor d;
    d.name = "shift";
    d.d = [](const Value& a) -> Value {
        auto s = std::any_cast<CardSeq>(a);
        if (s.coeffs.empty()) return s;
        s.coeffs.erase(s.coeffs.begin());
        return fs_strip(std::move(s));
    };
    return d;
}

}  // namespace drig::species
