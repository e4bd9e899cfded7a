#include "drig/instances.hpp"

#include <string>

namespace drig {

Cardinal cardinal_add(Cardinal a, Cardinal b) {
    if (a.omega || b.omega) return Cardinal::inf();
    return Cardinal::finite(a.n + b.n);
}

Cardinal cardinal_mul(Cardinal a, Cardinal b) {
    if (a.omega) return (b.omega || b.n >= 1) ? Cardinal::inf() : Cardinal::finite(0);
    if (b.omega) return a.n >= 1 ? Cardinal::inf() : Cardinal::finite(0);
    return Cardinal::finite(a.n * b.n);
}

std::string cardinal_render(Cardinal a) {
    return a.omega ? "w" : std::to_string(a.n);
}

RigInstance make_nat_rig() {
    RigInstance r;
    r.name = "nat";
    r.sample = [](Rng& rng) -> Value {
        return std::uniform_int_distribution<std::uint64_t>(0, 20)(rng);
    };
    r.eq = [](const Value& a, const Value& b) {
        return std::any_cast<std::uint64_t>(a) == std::any_cast<std::uint64_t>(b);
    };
    r.zero = std::uint64_t{0};
    r.one = std::uint64_t{1};
    r.add = [](const Value& a, const Value& b) -> Value {
        return std::any_cast<std::uint64_t>(a) + std::any_cast<std::uint64_t>(b);
    };
    r.mul = [](const Value& a, const Value& b) -> Value {
        return std::any_cast<std::uint64_t>(a) * std::any_cast<std::uint64_t>(b);
    };
    r.render = [](const Value& a) {
        return std::to_string(std::any_cast<std::uint64_t>(a));
    };
    std::vector<Value> carrier;
    for (std::uint64_t i = 0; i <= 20; ++i) carrier.emplace_back(i);
    r.finite_carrier = std::move(carrier);
    return r;
}

RigInstance make_cardinal_rig(std::uint64_t k) {
    RigInstance r;
    r.name = "cardinal";
    std::vector<Value> carrier;
    for (std::uint64_t i = 0; i <= k; ++i)
        carrier.emplace_back(Cardinal::finite(i));
    carrier.emplace_back(Cardinal::inf());
    // sampler draws from the truncated carrier (finite overflow would
    // leave it, omega-saturated values never do)
    r.sample = [k](Rng& rng) -> Value {
        auto i = std::uniform_int_distribution<std::uint64_t>(0, k + 1)(rng);
        return i > k ? Cardinal::inf() : Cardinal::finite(i);
    };
    r.eq = [](const Value& a, const Value& b) {
        return std::any_cast<Cardinal>(a) == std::any_cast<Cardinal>(b);
    };
    r.zero = Cardinal::finite(0);
    r.one = Cardinal::finite(1);
    r.add = [](const Value& a, const Value& b) -> Value {
        return cardinal_add(std::any_cast<Cardinal>(a), std::any_cast<Cardinal>(b));
    };
    r.mul = [](const Value& a, const Value& b) -> Value {
        return cardinal_mul(std::any_cast<Cardinal>(a), std::any_cast<Cardinal>(b));
    };
    r.render = [](const Value& a) { return cardinal_render(std::any_cast<Cardinal>(a)); };
    r.finite_carrier = std::move(carrier);
    return r;
}

RigInstance make_bool_rig() {
    RigInstance r;
    r.name = "bool";
    r.sample = [](Rng& rng) -> Value {
        return std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    };
    r.eq = [](const Value& a, const Value& b) {
        return std::any_cast<bool>(a) == std::any_cast<bool>(b);
    };
    r.zero = false;
    r.one = true;
    r.add = [](const Value& a, const Value& b) -> Value {
        return std::any_cast<bool>(a) || std::any_cast<bool>(b);
    };
    r.mul = [](const Value& a, const Value& b) -> Value {
        return std::any_cast<bool>(a) && std::any_cast<bool>(b);
    };
    r.render = [](const Value& a) {
        return std::string(std::any_cast<bool>(a) ? "1" : "0");
    };
    r.finite_carrier = std::vector<Value>{Value(false), Value(true)};
    return r;
}

DerivationDescriptor make_trivial_derivation(const RigInstance& inst) {
    DerivationDescriptor d;
    d.name = "trivial";
    Value zero = inst.zero;
    d.d = [zero](const Value&) { return zero; };
    return d;
}

DerivationDescriptor make_cardinal_omega_derivation() {
    DerivationDescriptor d;
    d.name = "omega-scale";
    d.d = [](const Value& a) -> Value {
        return cardinal_mul(Cardinal::inf(), std::any_cast<Cardinal>(a));
    };
    return d;
}

DerivationDescriptor make_bool_identity_derivation() {
    DerivationDescriptor d;
    d.name = "identity";
    d.d = [](const Value& a) { return a; };
    return d;
}

}  // namespace drig
