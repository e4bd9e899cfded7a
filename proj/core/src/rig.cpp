#include "drig/rig.hpp"

#include <nlohmann/json.hpp>

namespace drig {

namespace {

// Per-law seed so laws draw independent tuples but stay reproducible.
std::uint64_t law_seed(std::uint64_t seed, const std::string& law) {
    return seed ^ (std::hash<std::string>{}(law) * 0x9e3779b97f4a7c15ull);
}

std::vector<std::string> render_all(const RigInstance& inst,
                                    const std::vector<Value>& args) {
    std::vector<std::string> out;
    out.reserve(args.size());
    for (const auto& a : args) out.push_back(inst.render(a));
    return out;
}

// Iterate over all arity-tuples from the carrier; returns false as soon
// as the visitor reports a violation.
bool for_each_tuple(const std::vector<Value>& carrier, int arity,
                    std::vector<Value>& args, std::size_t& count,
                    const std::function<bool(const std::vector<Value>&)>& ok) {
    if (arity == 0) {
        ++count;
        return ok(args);
    }
    for (const auto& v : carrier) {
        args.push_back(v);
        bool good = for_each_tuple(carrier, arity - 1, args, count, ok);
        args.pop_back();
        if (!good) return false;
    }
    return true;
}

constexpr std::size_t kExhaustiveCap = 200000;

}  // namespace

std::vector<Law> rig_laws() {
    auto eq = [](const RigInstance& r, const Value& a, const Value& b) {
        return r.eq(a, b);
    };
    return {
        {"add-assoc", 3,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.add(r.add(v[0], v[1]), v[2]),
                       r.add(v[0], r.add(v[1], v[2])));
         }},
        {"add-comm", 2,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.add(v[0], v[1]), r.add(v[1], v[0]));
         }},
        {"add-unit", 1,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.add(v[0], r.zero), v[0]) &&
                    eq(r, r.add(r.zero, v[0]), v[0]);
         }},
        {"mul-assoc", 3,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(r.mul(v[0], v[1]), v[2]),
                       r.mul(v[0], r.mul(v[1], v[2])));
         }},
        {"mul-unit-left", 1,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(r.one, v[0]), v[0]);
         }},
        {"mul-unit-right", 1,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(v[0], r.one), v[0]);
         }},
        {"distrib-left", 3,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(v[0], r.add(v[1], v[2])),
                       r.add(r.mul(v[0], v[1]), r.mul(v[0], v[2])));
         }},
        {"distrib-right", 3,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(r.add(v[0], v[1]), v[2]),
                       r.add(r.mul(v[0], v[2]), r.mul(v[1], v[2])));
         }},
        {"annihilate-left", 1,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(r.zero, v[0]), r.zero);
         }},
        {"annihilate-right", 1,
         [eq](const RigInstance& r, const std::vector<Value>& v) {
             return eq(r, r.mul(v[0], r.zero), r.zero);
         }},
    };
}

std::vector<Law> derivation_laws(const DerivationDescriptor& d) {
    auto der = d.d;
    auto twist = d.twist;
    return {
        {"d-zero", 0,
         [der](const RigInstance& r, const std::vector<Value>&) {
             return r.eq(der(r.zero), r.zero);
         }},
        {"linearity", 2,
         [der](const RigInstance& r, const std::vector<Value>& v) {
             return r.eq(der(r.add(v[0], v[1])), r.add(der(v[0]), der(v[1])));
         }},
        {"twisted-leibniz", 2,
         [der, twist](const RigInstance& r, const std::vector<Value>& v) {
             Value ga = twist ? twist(v[0]) : v[0];
             return r.eq(der(r.mul(v[0], v[1])),
                         r.add(r.mul(der(v[0]), v[1]), r.mul(ga, der(v[1]))));
         }},
    };
}

LawReport check_law(const RigInstance& inst, const Law& law,
                    std::size_t n_samples, std::uint64_t seed) {
    LawReport rep;
    rep.instance = inst.name;
    rep.law = law.name;

    bool exhaustive = false;
    if (inst.finite_carrier) {
        std::size_t tuples = 1;
        for (int i = 0; i < law.arity; ++i) {
            tuples *= inst.finite_carrier->size();
            if (tuples > kExhaustiveCap) break;
        }
        exhaustive = tuples <= kExhaustiveCap;
    }

    auto record_failure = [&](const std::vector<Value>& args) {
        rep.status = LawStatus::Failed;
        rep.witness = args;
        rep.counterexample = render_all(inst, args);
    };

    if (exhaustive) {
        std::vector<Value> args;
        std::size_t count = 0;
        for_each_tuple(*inst.finite_carrier, law.arity, args, count,
                       [&](const std::vector<Value>& a) {
                           if (law.pred(inst, a)) return true;
                           record_failure(a);
                           return false;
                       });
        rep.samples = count;
        return rep;
    }

    if (n_samples < 1) throw Error("check_law: n_samples must be >= 1");
    Rng rng(law_seed(seed, law.name));
    for (std::size_t i = 0; i < n_samples; ++i) {
        std::vector<Value> args;
        args.reserve(static_cast<std::size_t>(law.arity));
        for (int k = 0; k < law.arity; ++k) args.push_back(inst.sample(rng));
        ++rep.samples;
        if (!law.pred(inst, args)) {
            record_failure(args);
            return rep;
        }
        if (law.arity == 0) break;  // nothing to vary
    }
    return rep;
}

std::vector<LawReport> check_rig_laws(const RigInstance& inst,
                                      std::size_t n_samples,
                                      std::uint64_t seed) {
    std::vector<LawReport> out;
    for (const auto& law : rig_laws())
        out.push_back(check_law(inst, law, n_samples, seed));
    return out;
}

std::vector<LawReport> check_derivation_laws(const RigInstance& inst,
                                             const DerivationDescriptor& d,
                                             std::size_t n_samples,
                                             std::uint64_t seed) {
    std::vector<LawReport> out;
    for (const auto& law : derivation_laws(d)) {
        LawReport rep = check_law(inst, law, n_samples, seed);
        if (law.name == "linearity" && !d.expected_linear &&
            rep.status == LawStatus::Failed)
            rep.status = LawStatus::NotClaimed;  // keep the counterexample
        out.push_back(std::move(rep));
    }
    return out;
}

SelfSimilarResult find_self_similar(const RigInstance& inst) {
    if (!inst.finite_carrier)
        throw Error(inst.name + ": not enumerable (no finite carrier)");
    SelfSimilarResult res;
    for (const auto& a : *inst.finite_carrier)
        if (inst.eq(inst.add(a, a), a)) res.elements.push_back(a);
    res.taut = res.elements.size() == 1 && inst.eq(res.elements[0], inst.zero);
    return res;
}

LawReport is_taut_via_dimension(const RigInstance& inst, const DimensionHom& dim,
                                std::size_t n_samples, std::uint64_t seed) {
    LawReport rep;
    rep.instance = inst.name;
    rep.law = "taut-via-dimension";

    std::vector<Value> pool;
    if (inst.finite_carrier) {
        pool = *inst.finite_carrier;
    } else {
        Rng rng(law_seed(seed, rep.law));
        for (std::size_t i = 0; i < n_samples; ++i)
            pool.push_back(inst.sample(rng));
    }

    auto fail = [&](const std::string& why, const std::vector<Value>& w) {
        rep.status = LawStatus::Failed;
        rep.witness = w;
        rep.counterexample = render_all(inst, w);
        rep.counterexample.insert(rep.counterexample.begin(), why);
    };

    if (dim.dim(inst.zero) != 0) {
        fail("dim(zero) != 0", {inst.zero});
        return rep;
    }
    for (const auto& a : pool) {
        ++rep.samples;
        if (dim.dim(a) == 0 && !inst.eq(a, inst.zero)) {
            fail("dim does not reflect zero", {a});
            return rep;
        }
        for (const auto& b : pool) {
            if (dim.dim(inst.add(a, b)) != dim.dim(a) + dim.dim(b)) {
                fail("dim not additive", {a, b});
                return rep;
            }
        }
    }
    // Invariants hold; the tautness implication itself.
    for (const auto& a : pool) {
        if (inst.eq(inst.add(a, a), a) && !inst.eq(a, inst.zero)) {
            fail("self-similar non-zero element", {a});
            return rep;
        }
    }
    return rep;
}

LawReport derivation_unit_report(const RigInstance& inst,
                                 const DerivationDescriptor& d) {
    LawReport rep;
    rep.instance = inst.name;
    rep.law = "derivation-unit-idempotent";
    rep.samples = 1;
    Value d1 = d.d(inst.one);
    if (!inst.eq(inst.add(d1, d1), d1)) {
        rep.status = LawStatus::Failed;
        rep.witness = {d1};
        rep.counterexample = {inst.render(d1)};
    }
    return rep;
}

std::vector<Value> napier_search(const RigInstance& inst,
                                 const DerivationDescriptor& d) {
    if (!inst.finite_carrier)
        throw Error(inst.name + ": not enumerable (no finite carrier)");
    std::vector<Value> out;
    for (const auto& a : *inst.finite_carrier)
        if (inst.eq(d.d(a), a)) out.push_back(a);
    return out;
}

DerivationChain iterate_derivation_chain(const RigInstance& inst,
                                         const DerivationDescriptor& d,
                                         const Value& start,
                                         std::size_t max_steps) {
    if (max_steps < 1) throw Error("iterate_derivation_chain: max_steps >= 1");
    DerivationChain chain;
    chain.values.push_back(start);
    Value cur = start;
    for (std::size_t i = 0; i < max_steps; ++i) {
        Value next = d.d(cur);
        if (inst.eq(next, cur)) {
            chain.stabilized_at = i;
            return chain;
        }
        chain.values.push_back(next);
        cur = next;
    }
    return chain;
}

Value nfold_add(const RigInstance& inst, std::size_t n, const Value& a) {
    Value acc = inst.zero;
    for (std::size_t i = 0; i < n; ++i) acc = inst.add(acc, a);
    return acc;
}

std::string status_name(LawStatus s) {
    switch (s) {
        case LawStatus::Passed: return "passed";
        case LawStatus::Failed: return "failed";
        case LawStatus::NotClaimed: return "not-claimed";
        case LawStatus::PreconditionUnmet: return "precondition-unmet";
    }
    return "unknown";
}

std::string reports_to_json(const std::vector<LawReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["schema"] = 1;
        j["instance"] = r.instance;
        j["law"] = r.law;
        j["status"] = status_name(r.status);
        j["passed"] = !r.failed();
        j["samples"] = r.samples;
        if (r.counterexample.empty())
            j["counterexample"] = nullptr;
        else
            j["counterexample"] = r.counterexample;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

bool all_passed(const std::vector<LawReport>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return false;
    return true;
}

}  // namespace drig
