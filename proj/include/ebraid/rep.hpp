#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ebraid/braid.hpp"
#include "ebraid/scalar.hpp"

namespace ebraid {

/// The four local tangle maps acting on tensor powers of the two-dimensional
/// module V = span{v+, v-} (parities p(v+)=0, p(v-)=1). Crossings are even,
/// cap and cup are odd.
enum class LocalKind { crossing_pos, crossing_neg, cap_n, cup_u };

int local_arity_in(LocalKind k);   // tensor factors consumed
int local_arity_out(LocalKind k);  // tensor factors produced
int local_parity(LocalKind k);     // 0 even, 1 odd

/// Matrix of TauLaurent entries, rows = outputs. Ordered pair basis
/// {v+v+, v+v-, v-v+, v-v-}; index = 2*first + second with v+ = 0, v- = 1.
using LocalMatrix = std::vector<std::vector<TauLaurent>>;

/// The explicit matrices: crossing_pos is the renormalized R-matrix,
/// crossing_neg its inverse, cap_n = (0, -tau^3, tau^3 q, 0),
/// cup_u = (0, -pi q^{-1}, 1, 0)^T with pi = tau^2.
LocalMatrix local_matrix(LocalKind k);

/// un, the even cup-cap composite.
LocalMatrix eprime_matrix();

// Oriented-calculus constants, kept for reference and unit-tested against
// their defining values; closure evaluation never uses them.
LocalMatrix oriented_ev();               // (1, 0, 0, 1)
LocalMatrix oriented_coev_renormalized();  // (tau^3 q, 0, 0, tau q^{-1})^T
LocalMatrix oriented_qtr_renormalized(); // (tau q^{-1}, 0, 0, tau^3 q)
LocalMatrix oriented_coqtr();            // (1, 0, 0, 1)^T

/// Element of V^{tensor length}: basis words are bitmasks, bit (p-1) = 1 when
/// the factor at 1-based position p is v-.
struct TensorVector {
    int length = 0;
    std::map<std::uint32_t, TauLaurent> coeffs;

    static TensorVector scalar(TauLaurent c);
    bool operator==(const TensorVector& o) const { return length == o.length && coeffs == o.coeffs; }
};

/// Apply a local map at 1-based position `pos`. Odd maps pick up the
/// super-interchange coefficient pi^{parity of the factors left of pos}.
TensorVector apply_local(LocalKind kind, int pos, const TensorVector& v);

/// Exact matrix identities crossing_pos = tau*Id - q*un and
/// crossing_neg = tau^3*Id - q^{-1}*un.
bool verify_crossing_identity();

/// Cap on the tensor width (2^k basis states, k <= 16 factors).
inline constexpr int kMaxTensorFactors = 16;

/// Slice the closed diagram of b: create the n nested closure cups left to
/// right, run the braid crossings, cap off right to left. Returns the scalar,
/// which equals bracket(b).
TauLaurent evaluate_closed_braid(const BraidWord& b);

/// (tau^2 q)^{writhe} * evaluate_closed_braid.
TauLaurent jhat_oracle(const BraidWord& b);

}  // namespace ebraid
