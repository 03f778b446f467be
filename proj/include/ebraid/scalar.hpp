#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "ebraid/errors.hpp"

namespace ebraid {

using Int = mpz_class;

/// Element of Z[tau]/(tau^4 - 1), stored as four exact integer coefficients.
/// This ring carries the whole calculus: tau is a fourth root of unity and
/// pi := tau^2 is the square root of 1 used by the covering theory.
class CyclotomicInt4 {
  public:
    CyclotomicInt4() = default;
    CyclotomicInt4(long v) { c_[0] = v; }
    explicit CyclotomicInt4(Int v) { c_[0] = std::move(v); }

    /// tau^k, exponent reduced mod 4.
    static CyclotomicInt4 tau_power(int k);
    /// c * tau^k.
    static CyclotomicInt4 monomial(const Int& c, int k);

    const Int& coeff(int k) const { return c_[mod4(k)]; }
    bool is_zero() const;

    CyclotomicInt4& operator+=(const CyclotomicInt4& o);
    CyclotomicInt4& operator-=(const CyclotomicInt4& o);
    CyclotomicInt4& operator*=(const CyclotomicInt4& o);
    friend CyclotomicInt4 operator+(CyclotomicInt4 a, const CyclotomicInt4& b) { return a += b; }
    friend CyclotomicInt4 operator-(CyclotomicInt4 a, const CyclotomicInt4& b) { return a -= b; }
    friend CyclotomicInt4 operator*(const CyclotomicInt4& a, const CyclotomicInt4& b);
    CyclotomicInt4 operator-() const;

    /// Multiplication by tau^k is a cyclic shift of the stored coefficients.
    CyclotomicInt4 times_tau(int k) const;

    bool operator==(const CyclotomicInt4& o) const;
    bool operator!=(const CyclotomicInt4& o) const { return !(*this == o); }
    bool operator<(const CyclotomicInt4& o) const;  // for use as a map key

    static int mod4(int k) { return ((k % 4) + 4) % 4; }

  private:
    std::array<Int, 4> c_{};  // c_[j] is the coefficient of tau^j
};

/// Element a + b*pi of Z[pi]/(pi^2 - 1). Entries of covering differentials.
struct PiScalar {
    std::int64_t a = 0;
    std::int64_t b = 0;

    PiScalar() = default;
    PiScalar(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}
    static PiScalar pi() { return PiScalar(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }
    /// The unit group of Z^pi is exactly {1, -1, pi, -pi}.
    bool is_unit() const { return (a == 0 && (b == 1 || b == -1)) || (b == 0 && (a == 1 || a == -1)); }

    PiScalar times_pi() const { return PiScalar(b, a); }
    PiScalar times_pi_power(int k) const { return (k & 1) ? times_pi() : *this; }
    std::int64_t specialize(int s) const { return a + b * s; }  // pi -> s, s in {+1,-1}

    PiScalar& operator+=(const PiScalar& o) { a += o.a; b += o.b; return *this; }
    PiScalar& operator-=(const PiScalar& o) { a -= o.a; b -= o.b; return *this; }
    friend PiScalar operator+(PiScalar x, const PiScalar& y) { return x += y; }
    friend PiScalar operator-(PiScalar x, const PiScalar& y) { return x -= y; }
    friend PiScalar operator*(const PiScalar& x, const PiScalar& y) {
        return PiScalar(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a);
    }
    PiScalar operator-() const { return PiScalar(-a, -b); }
    bool operator==(const PiScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const PiScalar& o) const { return !(*this == o); }
};

/// Laurent polynomial in q with CyclotomicInt4 coefficients: the value type of
/// brackets, invariants and graded Euler characteristics.
/// Canonical form never stores a zero coefficient.
class TauLaurent {
  public:
    TauLaurent() = default;

    static TauLaurent zero() { return TauLaurent(); }
    static TauLaurent one() { return monomial(0, 0, 1); }
    /// c * tau^a * q^b
    static TauLaurent monomial(int tau_exp, int q_exp, Int c = 1);
    /// The circle value d = tau^3 q + tau q^{-1} (= tau^{-1} q + tau q^{-1}).
    static TauLaurent circle_value();

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, CyclotomicInt4>& terms() const { return terms_; }

    void add_term(int q_exp, const CyclotomicInt4& c);

    TauLaurent& operator+=(const TauLaurent& o);
    TauLaurent& operator-=(const TauLaurent& o);
    friend TauLaurent operator+(TauLaurent a, const TauLaurent& b) { return a += b; }
    friend TauLaurent operator-(TauLaurent a, const TauLaurent& b) { return a -= b; }
    friend TauLaurent operator*(const TauLaurent& a, const TauLaurent& b);
    TauLaurent operator-() const;

    /// Multiply by c * tau^a * q^b without building a temporary polynomial.
    TauLaurent times_monomial(int tau_exp, int q_exp, const Int& c = 1) const;

    /// (tau^2 q)^w for any integer w; the inverse is (tau^2 q^{-1})^{|w|}.
    static TauLaurent writhe_normalizer(int w);

    bool operator==(const TauLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const TauLaurent& o) const { return !(*this == o); }

    /// Canonical text rendering: terms ascending by q-exponent then
    /// tau-exponent, each "{c}*t^{a}*q^{b}" joined by " + "; zero renders "0".
    std::string to_text() const;
    /// {"terms":[{"c":int,"tau":0..3,"q":int},...]} in the same order.
    std::string to_json() const;

  private:
    std::map<int, CyclotomicInt4> terms_;  // q-exponent -> coefficient
};

/// Gaussian integer x + y*t with t^2 = -1.
struct GaussInt {
    Int x;
    Int y;

    GaussInt() = default;
    GaussInt(Int x_, Int y_ = 0) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    GaussInt& operator+=(const GaussInt& o) { x += o.x; y += o.y; return *this; }
    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x);
    }
    /// times t^k
    GaussInt times_t(int k) const;
    bool operator==(const GaussInt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
};

/// Laurent polynomial in q with Gaussian-integer coefficients; the target of
/// tau-specializations.
class GaussLaurent {
  public:
    GaussLaurent() = default;
    static GaussLaurent monomial(int q_exp, GaussInt c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, GaussInt>& terms() const { return terms_; }
    void add_term(int q_exp, const GaussInt& c);

    GaussLaurent& operator+=(const GaussLaurent& o);
    friend GaussLaurent operator+(GaussLaurent a, const GaussLaurent& b) { return a += b; }
    friend GaussLaurent operator*(const GaussLaurent& a, const GaussLaurent& b);
    bool operator==(const GaussLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const GaussLaurent& o) const { return !(*this == o); }

    std::string to_text() const;

  private:
    std::map<int, GaussInt> terms_;
};

/// Ring homomorphism tau -> t^k (k in 0..3): k=0 sends tau to 1, k=2 to -1,
/// k=1,3 to +-t.
GaussLaurent specialize_tau(const TauLaurent& p, int k);

/// Component of p attached to the orthogonal idempotent
/// eps_{t^k} = (1 + (t^k tau) + (t^k tau)^2 + (t^k tau)^3) / 4,
/// expressed in Z[t][q,q^-1]: equals p|_{tau -> t^{-k}} / 4.
/// Throws ComponentNotIntegral when the division by 4 does not go through
/// (p is then not in the image of the integral decomposition).
GaussLaurent idempotent_component(const TauLaurent& p, int k);

/// Exact check, over the 8-dimensional ring Z[t][tau]/(t^2+1, tau^4-1), that
/// the four specialized pieces reassemble p:  sum_k p|_{tau->t^{-k}} * (4 eps_{t^k}) = 4p.
bool idempotent_decomposition_reconstructs(const TauLaurent& p);

/// True when every stored monomial tau^a q^b of p has a + b = r (mod 4).
bool degree_parity_is(const TauLaurent& p, int r);

}  // namespace ebraid
