#include "drig/poly.hpp"

#include <algorithm>

namespace drig::poly {

namespace {

void strip(Poly& p) {
    while (!p.coeffs.empty() && p.base->eq(p.coeffs.back(), p.base->zero))
        p.coeffs.pop_back();
}

void require_same_base(const Poly& p, const Poly& q) {
    if (p.base != q.base)
        throw Error("poly: base rig mismatch (" + p.base->name + " vs " +
                    q.base->name + ")");
}

}  // namespace

Poly make_poly(const RigInstance& base, std::vector<Value> coeffs) {
    Poly p{&base, std::move(coeffs)};
    strip(p);
    return p;
}

Poly poly_zero(const RigInstance& base) { return Poly{&base, {}}; }

Poly poly_one(const RigInstance& base) { return make_poly(base, {base.one}); }

int poly_degree(const Poly& p) { return static_cast<int>(p.coeffs.size()) - 1; }

bool poly_eq(const Poly& p, const Poly& q) {
    require_same_base(p, q);
    if (p.coeffs.size() != q.coeffs.size()) return false;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (!p.base->eq(p.coeffs[i], q.coeffs[i])) return false;
    return true;
}

std::string render_poly(const Poly& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.base->eq(p.coeffs[i], p.base->zero)) continue;
        if (!out.empty()) out += " + ";
        std::string c = p.base->render(p.coeffs[i]);
        if (i == 0) {
            out += c;
        } else {
            std::string y = i == 1 ? "Y" : "Y^" + std::to_string(i);
            out += p.base->eq(p.coeffs[i], p.base->one) ? y : c + "*" + y;
        }
    }
    return out.empty() ? "0" : out;
}

Poly poly_add(const Poly& p, const Poly& q) {
    require_same_base(p, q);
    const RigInstance& b = *p.base;
    std::vector<Value> out(std::max(p.coeffs.size(), q.coeffs.size()), b.zero);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) out[i] = p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i)
        out[i] = b.add(out[i], q.coeffs[i]);
    return make_poly(b, std::move(out));
}

Poly poly_mul(const Poly& p, const Poly& q) {
    require_same_base(p, q);
    const RigInstance& b = *p.base;
    if (p.coeffs.empty() || q.coeffs.empty()) return poly_zero(b);
    std::vector<Value> out(p.coeffs.size() + q.coeffs.size() - 1, b.zero);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            out[i + j] = b.add(out[i + j], b.mul(p.coeffs[i], q.coeffs[j]));
    return make_poly(b, std::move(out));
}

Poly poly_derive(const Poly& p, const DerivationDescriptor* base_d) {
    const RigInstance& b = *p.base;
    if (p.coeffs.empty()) return poly_zero(b);
    std::vector<Value> out(p.coeffs.size(), b.zero);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (base_d) out[i] = b.add(out[i], base_d->d(p.coeffs[i]));
        if (i >= 1)
            out[i - 1] = b.add(out[i - 1], nfold_add(b, i, p.coeffs[i]));
    }
    return make_poly(b, std::move(out));
}

Value poly_eval(const Poly& p, const std::function<Value(const Value&)>& hom,
                const RigInstance& target, const Value& e) {
    Value acc = target.zero;
    Value power = target.one;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        acc = target.add(acc, target.mul(hom(p.coeffs[i]), power));
        power = target.mul(power, e);
    }
    return acc;
}

RigInstance make_poly_rig(const RigInstance& base) {
    RigInstance r;
    r.name = "poly-" + base.name;
    const RigInstance* bp = &base;
    r.sample = [bp](Rng& rng) -> Value {
        auto deg = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        std::vector<Value> coeffs;
        for (std::size_t i = 0; i <= deg; ++i) coeffs.push_back(bp->sample(rng));
        return make_poly(*bp, std::move(coeffs));
    };
    r.eq = [](const Value& a, const Value& b) {
        return poly_eq(std::any_cast<Poly>(a), std::any_cast<Poly>(b));
    };
    r.zero = poly_zero(base);
    r.one = poly_one(base);
    r.add = [](const Value& a, const Value& b) -> Value {
        return poly_add(std::any_cast<Poly>(a), std::any_cast<Poly>(b));
    };
    r.mul = [](const Value& a, const Value& b) -> Value {
        return poly_mul(std::any_cast<Poly>(a), std::any_cast<Poly>(b));
    };
    r.render = [](const Value& a) { return render_poly(std::any_cast<Poly>(a)); };
    return r;
}

DerivationDescriptor make_poly_derivation(const RigInstance& base) {
    DerivationDescriptor d;
    d.name = "dY";
    (void)base;
    d.d = [](const Value& a) -> Value {
        return poly_derive(std::any_cast<Poly>(a));
    };
    return d;
}

// ------------------------------------------------------ differential polys

DiffPoly dp_add(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly out = a;
    for (const auto& [mono, c] : b.terms) {
        auto& slot = out.terms[mono];
        slot += c;
        if (slot == 0) out.terms.erase(mono);
    }
    return out;
}

DiffPoly diffpoly_derive(const DiffPoly& dp) {
    DiffPoly out;
    for (const auto& [mono, c] : dp.terms) {
        // Leibniz over the multiset: each Y(i) factor steps to Y(i+1).
        for (const auto& [order, exp] : mono) {
            Monomial m = mono;
            if (--m[order] == 0) m.erase(order);
            ++m[order + 1];
            auto& slot = out.terms[m];
            slot += c * exp;
            if (slot == 0) out.terms.erase(m);
        }
    }
    return out;
}

namespace {

class DiffPolyParser {
public:
    explicit DiffPolyParser(std::string_view t) : text_(t) {}

    DiffPoly parse() {
        DiffPoly out = dp_add(DiffPoly{}, term());
        while (eat('+')) out = dp_add(out, term());
        skip_ws();
        if (pos_ != text_.size())
            throw Error("diffpoly parse error at position " + std::to_string(pos_));
        return out;
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
    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    unsigned number() {
        skip_ws();
        if (!peek_digit()) throw Error("diffpoly parse error: expected number at position " +
                                       std::to_string(pos_));
        unsigned v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
        return v;
    }

    DiffPoly term() {
        species::BigInt coeff = 1;
        Monomial mono;
        bool saw_factor = false;
        if (peek_digit()) {
            coeff = number();
            saw_factor = true;
            if (!eat('*')) {
                DiffPoly out;
                if (coeff != 0) out.terms[mono] = coeff;
                return out;
            }
            saw_factor = false;
        }
        do {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'Y')
                throw Error("diffpoly parse error: expected Y(i) at position " +
                            std::to_string(pos_));
            ++pos_;
            if (!eat('(')) throw Error("diffpoly parse error: expected '('");
            unsigned order = number();
            if (!eat(')')) throw Error("diffpoly parse error: expected ')'");
            ++mono[order];
            saw_factor = true;
        } while (eat('*'));
        if (!saw_factor) throw Error("diffpoly parse error: empty term");
        DiffPoly out;
        if (coeff != 0) out.terms[mono] = coeff;
        return out;
    }
};

}  // namespace

DiffPoly parse_diffpoly(std::string_view text) {
    return DiffPolyParser(text).parse();
}

std::string render_diffpoly(const DiffPoly& dp) {
    if (dp.terms.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : dp.terms) {
        if (!out.empty()) out += " + ";
        std::string factors;
        for (const auto& [order, exp] : mono)
            for (unsigned i = 0; i < exp; ++i) {
                if (!factors.empty()) factors += "*";
                factors += "Y(" + std::to_string(order) + ")";
            }
        if (factors.empty())
            out += c.str();
        else if (c == 1)
            out += factors;
        else
            out += c.str() + "*" + factors;
    }
    return out;
}

unsigned diffpoly_order(const DiffPoly& dp) {
    unsigned k = 0;
    for (const auto& [mono, c] : dp.terms)
        for (const auto& [order, exp] : mono) k = std::max(k, order);
    return k;
}

species::CardSeq dpe_eval(const DiffPoly& dp, const species::CardSeq& candidate,
                          std::size_t n) {
    using species::CardSeq;
    unsigned k = diffpoly_order(dp);
    if (candidate.coeffs.size() < n + k + 1)
        throw Error("dpe_eval: candidate truncation " +
                    std::to_string(candidate.coeffs.size() - 1) +
                    " insufficient, need " + std::to_string(n + k));
    // Y(i) := shift^i(candidate), cut to truncation n.
    std::vector<CardSeq> shifts(k + 1);
    for (unsigned i = 0; i <= k; ++i)
        shifts[i].coeffs.assign(candidate.coeffs.begin() + i,
                                candidate.coeffs.begin() + i + n + 1);
    CardSeq acc;
    acc.coeffs.assign(n + 1, 0);
    for (const auto& [mono, c] : dp.terms) {
        CardSeq term;
        term.coeffs.assign(n + 1, 0);
        term.coeffs[0] = c;
        for (const auto& [order, exp] : mono)
            for (unsigned i = 0; i < exp; ++i)
                term = species::cs_mul(term, shifts[order]);
        acc = species::cs_add(acc, term);
    }
    return acc;
}

LawReport dpe_check_solution(const DiffPoly& dp,
                             const species::CardSeq& candidate, std::size_t n) {
    LawReport rep;
    rep.instance = "dpe";
    rep.law = "fixed-point";
    rep.samples = 1;
    auto lhs = species::cs_truncate(candidate, n);
    auto rhs = dpe_eval(dp, candidate, n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs.coeffs[i] != rhs.coeffs[i]) {
            rep.status = LawStatus::Failed;
            rep.counterexample = {"equation X = " + render_diffpoly(dp),
                                  "index " + std::to_string(i),
                                  "candidate " + lhs.coeffs[i].str(),
                                  "rhs " + rhs.coeffs[i].str()};
            return rep;
        }
    }
    return rep;
}

}  // namespace drig::poly
