#ifndef DRIG_INSTANCES_HPP
#define DRIG_INSTANCES_HPP

#include <cstdint>

#include "drig/rig.hpp"

namespace drig {

/// Element of N u {omega}. Arithmetic is exact: omega + x = omega,
/// omega * x = omega for x >= 1, omega * 0 = 0.
struct Cardinal {
    std::uint64_t n = 0;
    bool omega = false;

    static Cardinal finite(std::uint64_t k) { return {k, false}; }
    static Cardinal inf() { return {0, true}; }

    friend bool operator==(const Cardinal&, const Cardinal&) = default;
};

Cardinal cardinal_add(Cardinal a, Cardinal b);
Cardinal cardinal_mul(Cardinal a, Cardinal b);
std::string cardinal_render(Cardinal a);

/// (N, +, x); finite carrier {0..20} for the self-similarity searches,
/// sampler bounded so products stay small.
RigInstance make_nat_rig();

/// N u {omega} with the carrier truncated to {0..k, omega} so every
/// law check is exhaustive. Arithmetic itself never truncates.
RigInstance make_cardinal_rig(std::uint64_t k = 8);

/// ({0,1}, or, and) — the smallest nontaut rig (a lattice).
RigInstance make_bool_rig();

/// d(a) = 0 for all a: the trivial derivation, valid on any instance.
DerivationDescriptor make_trivial_derivation(const RigInstance& inst);

/// d(a) = omega * a on the cardinal rig.
DerivationDescriptor make_cardinal_omega_derivation();

/// d(a) = a on the boolean rig (idempotence makes Leibniz hold).
DerivationDescriptor make_bool_identity_derivation();

}  // namespace drig

#endif
