#pragma once

#include <cstdint>
#include <vector>

#include "ebraid/braid.hpp"
#include "ebraid/scalar.hpp"
#include "ebraid/tl.hpp"

namespace ebraid {

/// A choice of resolution, one bit per crossing of a braid word, in word order.
struct State {
    std::uint32_t bits = 0;
    int size = 0;

    State() = default;
    State(std::uint32_t b, int n) : bits(b), size(n) {}
    int bit(int j) const { return (bits >> j) & 1u; }
    int weight() const;  // number of 1-resolutions
};

/// Fully resolved closed diagram data: total circles of the trace closure and
/// the residual planar matching left after deleting internal loops.
struct ResolutionOutcome {
    int circles;
    PlanarMatching residual;
};

/// Hard cap on the exhaustive state sum (2^24 states).
inline constexpr int kMaxStateSumCrossings = 24;

/// Replace crossing j by the identity or cup-cap smoothing according to z_j:
/// positive crossings resolve 0 -> identity, 1 -> cup-cap; negative crossings
/// the other way around. Throws LengthMismatch when |z| != crossing count.
ResolutionOutcome resolve_state(const BraidWord& b, const State& z);

/// Circle count of the fully closed resolved diagram only (the cheap path the
/// state sum uses; equals resolve_state(b, z).circles).
int closed_circle_count(const BraidWord& b, const State& z);

/// Product over crossings of the per-crossing skein coefficient:
/// tau (positive, 0-res), -q (positive, 1-res), -q^{-1} (negative, 0-res),
/// tau^3 (negative, 1-res). The d^k loop factor is contributed separately by
/// circle counting.
TauLaurent state_weight(const BraidWord& b, const State& z);

/// Exhaustive state sum: sum_z state_weight(b,z) * d^{circles(b,z)}.
/// Throws TooManyCrossings beyond the cap.
TauLaurent bracket(const BraidWord& b);

/// Same value through the Temperley-Lieb representation: closure evaluation of
/// the product of rho(sigma) images.
TauLaurent bracket_via_tl(const BraidWord& b);

/// The oriented-link invariant: (tau^2 q)^{writhe} * bracket.
TauLaurent jhat(const BraidWord& b);
TauLaurent jhat_via_tl(const BraidWord& b);

}  // namespace ebraid
