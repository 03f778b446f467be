#include "ebraid/scalar.hpp"

#include <sstream>

namespace ebraid {

CyclotomicInt4 CyclotomicInt4::tau_power(int k) {
    CyclotomicInt4 r;
    r.c_[mod4(k)] = 1;
    return r;
}

CyclotomicInt4 CyclotomicInt4::monomial(const Int& c, int k) {
    CyclotomicInt4 r;
    r.c_[mod4(k)] = c;
    return r;
}

bool CyclotomicInt4::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

CyclotomicInt4& CyclotomicInt4::operator+=(const CyclotomicInt4& o) {
    for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
    return *this;
}

CyclotomicInt4& CyclotomicInt4::operator-=(const CyclotomicInt4& o) {
    for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
    return *this;
}

CyclotomicInt4 operator*(const CyclotomicInt4& a, const CyclotomicInt4& b) {
    CyclotomicInt4 r;
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[(i + j) & 3] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

CyclotomicInt4& CyclotomicInt4::operator*=(const CyclotomicInt4& o) {
    *this = *this * o;
    return *this;
}

CyclotomicInt4 CyclotomicInt4::operator-() const {
    CyclotomicInt4 r;
    for (int j = 0; j < 4; ++j) r.c_[j] = -c_[j];
    return r;
}

CyclotomicInt4 CyclotomicInt4::times_tau(int k) const {
    CyclotomicInt4 r;
    for (int j = 0; j < 4; ++j) r.c_[(j + k) & 3] = c_[j];
    return r;
}

bool CyclotomicInt4::operator==(const CyclotomicInt4& o) const {
    for (int j = 0; j < 4; ++j)
        if (c_[j] != o.c_[j]) return false;
    return true;
}

bool CyclotomicInt4::operator<(const CyclotomicInt4& o) const {
    for (int j = 0; j < 4; ++j) {
        int c = cmp(c_[j], o.c_[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

TauLaurent TauLaurent::monomial(int tau_exp, int q_exp, Int c) {
    TauLaurent r;
    if (c != 0) r.terms_[q_exp] = CyclotomicInt4::monomial(c, tau_exp);
    return r;
}

TauLaurent TauLaurent::circle_value() {
    TauLaurent d = monomial(3, 1);
    d += monomial(1, -1);
    return d;
}

void TauLaurent::add_term(int q_exp, const CyclotomicInt4& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(q_exp);
    if (it == terms_.end()) {
        terms_.emplace(q_exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TauLaurent& TauLaurent::operator+=(const TauLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TauLaurent& TauLaurent::operator-=(const TauLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TauLaurent operator*(const TauLaurent& a, const TauLaurent& b) {
    TauLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

TauLaurent TauLaurent::operator-() const {
    TauLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TauLaurent TauLaurent::times_monomial(int tau_exp, int q_exp, const Int& c) const {
    TauLaurent r;
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) {
        CyclotomicInt4 shifted = coeff.times_tau(tau_exp);
        if (c != 1) shifted *= CyclotomicInt4(c);
        r.terms_.emplace(e + q_exp, std::move(shifted));
    }
    return r;
}

TauLaurent TauLaurent::writhe_normalizer(int w) {
    // (tau^2 q)^w; negative w uses the inverse tau^2 q^{-1}.
    if (w >= 0) return monomial(CyclotomicInt4::mod4(2 * w), w);
    return monomial(CyclotomicInt4::mod4(-2 * w), w);
}

namespace {

void render_term(std::ostringstream& out, const Int& c, int tau_exp, int q_exp, bool& first) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*t^" << tau_exp << "*q^" << q_exp;
}

}  // namespace

std::string TauLaurent::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [q_exp, coeff] : terms_)
        for (int a = 0; a < 4; ++a)
            if (coeff.coeff(a) != 0) render_term(out, coeff.coeff(a), a, q_exp, first);
    return out.str();
}

std::string TauLaurent::to_json() const {
    std::ostringstream out;
    out << "{\"terms\":[";
    bool first = true;
    for (const auto& [q_exp, coeff] : terms_) {
        for (int a = 0; a < 4; ++a) {
            if (coeff.coeff(a) == 0) continue;
            if (!first) out << ",";
            first = false;
            out << "{\"c\":" << coeff.coeff(a).get_str() << ",\"tau\":" << a << ",\"q\":" << q_exp << "}";
        }
    }
    out << "]}";
    return out.str();
}

GaussInt GaussInt::times_t(int k) const {
    switch (((k % 4) + 4) % 4) {
        case 0: return *this;
        case 1: return GaussInt(-y, x);
        case 2: return GaussInt(-x, -y);
        default: return GaussInt(y, -x);
    }
}

GaussLaurent GaussLaurent::monomial(int q_exp, GaussInt c) {
    GaussLaurent r;
    if (!c.is_zero()) r.terms_.emplace(q_exp, std::move(c));
    return r;
}

void GaussLaurent::add_term(int q_exp, const GaussInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(q_exp);
    if (it == terms_.end()) {
        terms_.emplace(q_exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussLaurent& GaussLaurent::operator+=(const GaussLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GaussLaurent operator*(const GaussLaurent& a, const GaussLaurent& b) {
    GaussLaurent r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
    return r;
}

std::string GaussLaurent::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [q_exp, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.x.get_str();
        if (c.y >= 0) out << "+" << c.y.get_str();
        else out << c.y.get_str();
        out << "t)*q^" << q_exp;
    }
    return out.str();
}

GaussLaurent specialize_tau(const TauLaurent& p, int k) {
    GaussLaurent r;
    for (const auto& [q_exp, coeff] : p.terms()) {
        GaussInt g;
        for (int a = 0; a < 4; ++a) {
            if (coeff.coeff(a) == 0) continue;
            g += GaussInt(coeff.coeff(a)).times_t(k * a);
        }
        r.add_term(q_exp, g);
    }
    return r;
}

GaussLaurent idempotent_component(const TauLaurent& p, int k) {
    // tau acts on the eps_{t^k} summand by t^{-k}, so the attached scalar is
    // p|_{tau -> t^{-k}}; the integral piece eps * p needs that divisible by 4.
    GaussLaurent s = specialize_tau(p, (4 - (k & 3)) & 3);
    GaussLaurent r;
    for (const auto& [q_exp, c] : s.terms()) {
        if (c.x % 4 != 0 || c.y % 4 != 0)
            throw ComponentNotIntegral("idempotent component of " + p.to_text() +
                                       " at k=" + std::to_string(k) + " requires denominator 4");
        r.add_term(q_exp, GaussInt(c.x / 4, c.y / 4));
    }
    return r;
}

bool idempotent_decomposition_reconstructs(const TauLaurent& p) {
    // Accumulate sum_k p|_{tau->t^{-k}} * (1 + t^k tau + t^{2k} tau^2 + t^{3k} tau^3)
    // in Z[t][tau]/(t^2+1, tau^4-1), keyed by (q-exponent, tau-exponent).
    std::map<std::pair<int, int>, GaussInt> acc;
    auto add = [&acc](int q, int a, const GaussInt& g) {
        if (g.is_zero()) return;
        auto [it, inserted] = acc.emplace(std::make_pair(q, a), g);
        if (!inserted) {
            it->second += g;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    for (int k = 0; k < 4; ++k) {
        GaussLaurent s = specialize_tau(p, (4 - k) & 3);
        for (const auto& [q_exp, c] : s.terms())
            for (int j = 0; j < 4; ++j) add(q_exp, j, c.times_t(k * j));
    }
    // Compare with 4p.
    std::map<std::pair<int, int>, GaussInt> target;
    for (const auto& [q_exp, coeff] : p.terms())
        for (int a = 0; a < 4; ++a)
            if (coeff.coeff(a) != 0) target[{q_exp, a}] = GaussInt(4 * coeff.coeff(a));
    return acc == target;
}

bool degree_parity_is(const TauLaurent& p, int r) {
    r = CyclotomicInt4::mod4(r);
    for (const auto& [q_exp, coeff] : p.terms())
        for (int a = 0; a < 4; ++a)
            if (coeff.coeff(a) != 0 && CyclotomicInt4::mod4(a + q_exp) != r) return false;
    return true;
}

}  // namespace ebraid
