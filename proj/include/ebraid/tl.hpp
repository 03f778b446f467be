#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ebraid/braid.hpp"
#include "ebraid/scalar.hpp"

namespace ebraid {

/// A non-crossing perfect matching on the 2n boundary points of a
/// Temperley-Lieb diagram. Points 0..n-1 are the bottom boundary left to
/// right, points n..2n-1 the top boundary left to right. The identity diagram
/// pairs bottom-i with top-i.
class PlanarMatching {
  public:
    /// Validates that `pairing` is a perfect matching and planar.
    PlanarMatching(int n, std::vector<int> pairing);

    static PlanarMatching identity(int n);
    /// The cup-cap generator E_i (1 <= i <= n-1): bottom i paired with
    /// bottom i+1, top i with top i+1, everything else straight through.
    static PlanarMatching generator(int n, int i);

    int strands() const { return n_; }
    int partner(int p) const { return pair_[static_cast<std::size_t>(p)]; }
    int bottom(int i) const { return i; }          // 0-based strand index
    int top(int i) const { return n_ + i; }

    bool operator==(const PlanarMatching& o) const { return n_ == o.n_ && pair_ == o.pair_; }
    bool operator!=(const PlanarMatching& o) const { return !(*this == o); }
    bool operator<(const PlanarMatching& o) const {
        return n_ != o.n_ ? n_ < o.n_ : pair_ < o.pair_;
    }

    std::string to_text() const;

  private:
    int n_;
    std::vector<int> pair_;
};

/// Stack a under b, trace connectivity through the middle boundary, and
/// return the number of closed loops removed together with the residual
/// matching. The scalar reading is d^loops * result.
std::pair<int, PlanarMatching> tl_multiply(const PlanarMatching& a, const PlanarMatching& b);

/// Loops in the trace closure of a (top-i joined around the right to bottom-i).
int closure_loop_count(const PlanarMatching& a);

/// Formal Z^tau[q,q^-1]-linear combination of planar matchings: an element of
/// TL_n(d). Zero coefficients are never stored.
class TLElement {
  public:
    explicit TLElement(int n) : n_(n) {}

    static TLElement unit(int n);  // 1 * identity diagram

    int strands() const { return n_; }
    const std::map<PlanarMatching, TauLaurent>& terms() const { return terms_; }
    void add_term(const PlanarMatching& m, const TauLaurent& c);

    TLElement& operator+=(const TLElement& o);
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    /// Bilinear product; each diagram pair contributes d^loops * (stacked diagram).
    friend TLElement operator*(const TLElement& a, const TLElement& b);
    friend TLElement operator*(const TauLaurent& c, TLElement x);

    bool operator==(const TLElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

  private:
    int n_;
    std::map<PlanarMatching, TauLaurent> terms_;
};

/// Braid-group representation inside TL_n(d):
/// rho(sigma_i) = tau*Id - q*E_i, rho(sigma_i^{-1}) = tau^3*Id - q^{-1}*E_i.
TLElement rho_sigma(int n, int i, bool inverse);

/// Image of a whole braid word under rho, letters composed bottom to top.
TLElement rho_image(const BraidWord& b);

/// Trace-closure evaluation: sum over matchings of coefficient * d^{closure loops}.
TauLaurent tl_closure_eval(const TLElement& x);

}  // namespace ebraid
