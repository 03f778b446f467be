#include "ebraid/rep.hpp"

#include <bit>

namespace ebraid {

namespace {

TauLaurent mono(int tau_exp, int q_exp, long c = 1) { return TauLaurent::monomial(tau_exp, q_exp, c); }

LocalMatrix zero_matrix(int rows, int cols) {
    return LocalMatrix(static_cast<std::size_t>(rows),
                       std::vector<TauLaurent>(static_cast<std::size_t>(cols)));
}

}  // namespace

int local_arity_in(LocalKind k) {
    switch (k) {
        case LocalKind::crossing_pos:
        case LocalKind::crossing_neg:
        case LocalKind::cap_n: return 2;
        case LocalKind::cup_u: return 0;
    }
    return 0;
}

int local_arity_out(LocalKind k) {
    switch (k) {
        case LocalKind::crossing_pos:
        case LocalKind::crossing_neg:
        case LocalKind::cup_u: return 2;
        case LocalKind::cap_n: return 0;
    }
    return 0;
}

int local_parity(LocalKind k) {
    return (k == LocalKind::cap_n || k == LocalKind::cup_u) ? 1 : 0;
}

LocalMatrix local_matrix(LocalKind k) {
    switch (k) {
        case LocalKind::crossing_pos: {
            LocalMatrix m = zero_matrix(4, 4);
            m[0][0] = mono(1, 0);
            m[1][2] = mono(1, 1);
            m[2][1] = mono(3, 1);
            m[2][2] = mono(1, 0) - mono(3, 2);
            m[3][3] = mono(1, 0);
            return m;
        }
        case LocalKind::crossing_neg: {
            LocalMatrix m = zero_matrix(4, 4);
            m[0][0] = mono(3, 0);
            m[1][1] = mono(3, 0) - mono(1, -2);
            m[1][2] = mono(1, -1);
            m[2][1] = mono(3, -1);
            m[3][3] = mono(3, 0);
            return m;
        }
        case LocalKind::cap_n: {
            LocalMatrix m = zero_matrix(1, 4);
            m[0][1] = mono(3, 0, -1);
            m[0][2] = mono(3, 1);
            return m;
        }
        case LocalKind::cup_u: {
            LocalMatrix m = zero_matrix(4, 1);
            m[1][0] = mono(2, -1, -1);  // -pi q^{-1}
            m[2][0] = mono(0, 0);
            return m;
        }
    }
    return {};
}

LocalMatrix eprime_matrix() {
    LocalMatrix u = local_matrix(LocalKind::cup_u);
    LocalMatrix n = local_matrix(LocalKind::cap_n);
    LocalMatrix m = zero_matrix(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = u[r][0] * n[0][c];
    return m;
}

LocalMatrix oriented_ev() {
    LocalMatrix m = zero_matrix(1, 4);
    m[0][0] = mono(0, 0);
    m[0][3] = mono(0, 0);
    return m;
}

LocalMatrix oriented_coev_renormalized() {
    LocalMatrix m = zero_matrix(4, 1);
    m[0][0] = mono(3, 1);
    m[3][0] = mono(1, -1);
    return m;
}

LocalMatrix oriented_qtr_renormalized() {
    LocalMatrix m = zero_matrix(1, 4);
    m[0][0] = mono(1, -1);
    m[0][3] = mono(3, 1);
    return m;
}

LocalMatrix oriented_coqtr() {
    LocalMatrix m = zero_matrix(4, 1);
    m[0][0] = mono(0, 0);
    m[3][0] = mono(0, 0);
    return m;
}

TensorVector TensorVector::scalar(TauLaurent c) {
    TensorVector v;
    v.length = 0;
    if (!c.is_zero()) v.coeffs.emplace(0u, std::move(c));
    return v;
}

TensorVector apply_local(LocalKind kind, int pos, const TensorVector& v) {
    int in = local_arity_in(kind), out = local_arity_out(kind);
    if (pos < 1 || pos - 1 + in > v.length)
        throw PositionOutOfRange("local map does not fit at position " + std::to_string(pos));
    if (v.length - in + out > kMaxTensorFactors)
        throw TooManyStrands("tensor width capped at " + std::to_string(kMaxTensorFactors) +
                             " factors");

    const LocalMatrix matrix = local_matrix(kind);
    const int parity = local_parity(kind);
    const std::uint32_t low_mask = (pos > 1) ? ((1u << (pos - 1)) - 1u) : 0u;

    TensorVector r;
    r.length = v.length - in + out;
    auto add = [&r](std::uint32_t word, const TauLaurent& c) {
        if (c.is_zero()) return;
        auto it = r.coeffs.find(word);
        if (it == r.coeffs.end()) {
            r.coeffs.emplace(word, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    };

    for (const auto& [word, coeff] : v.coeffs) {
        // Super-interchange: odd maps moving past the prefix cost
        // pi^{prefix parity}; pi = tau^2.
        int prefix_parity = parity ? (std::popcount(word & low_mask) & 1) : 0;

        std::uint32_t low = word & low_mask;
        std::uint32_t high = (pos - 1 + in < 32) ? (word >> (pos - 1 + in)) : 0u;

        int in_index = 0;
        if (in == 2) in_index = static_cast<int>(((word >> (pos - 1)) & 1u) * 2 + ((word >> pos) & 1u));

        for (int out_index = 0; out_index < (out == 2 ? 4 : 1); ++out_index) {
            const TauLaurent& entry = (out == 2 && in == 2) ? matrix[static_cast<std::size_t>(out_index)]
                                                                     [static_cast<std::size_t>(in_index)]
                                      : (out == 2) ? matrix[static_cast<std::size_t>(out_index)][0]
                                                   : matrix[0][static_cast<std::size_t>(in_index)];
            if (entry.is_zero()) continue;
            std::uint32_t bits_out = 0;
            if (out == 2) bits_out = static_cast<std::uint32_t>(((out_index >> 1) & 1) | ((out_index & 1) << 1));
            std::uint32_t word_out = low | (bits_out << (pos - 1)) | (high << (pos - 1 + out));
            TauLaurent c = coeff * entry;
            if (prefix_parity) c = c.times_monomial(2, 0);
            add(word_out, c);
        }
    }
    return r;
}

bool verify_crossing_identity() {
    LocalMatrix ep = eprime_matrix();
    LocalMatrix pos = local_matrix(LocalKind::crossing_pos);
    LocalMatrix neg = local_matrix(LocalKind::crossing_neg);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            TauLaurent id_entry = (r == c) ? TauLaurent::one() : TauLaurent();
            TauLaurent want_pos = id_entry.times_monomial(1, 0) - ep[r][c].times_monomial(0, 1);
            TauLaurent want_neg = id_entry.times_monomial(3, 0) - ep[r][c].times_monomial(0, -1);
            if (pos[r][c] != want_pos || neg[r][c] != want_neg) return false;
        }
    }
    return true;
}

TauLaurent evaluate_closed_braid(const BraidWord& b) {
    int n = b.strands;
    if (2 * n > kMaxTensorFactors)
        throw TooManyStrands("closure evaluation needs 2*" + std::to_string(n) +
                             " tensor factors, cap is " + std::to_string(kMaxTensorFactors));

    TensorVector v = TensorVector::scalar(TauLaurent::one());
    // Nested closure cups: after these, braid strand i sits at position i and
    // its closure partner at position 2n+1-i.
    for (int i = 1; i <= n; ++i) v = apply_local(LocalKind::cup_u, i, v);
    for (int l : b.letters)
        v = apply_local(l > 0 ? LocalKind::crossing_pos : LocalKind::crossing_neg, l > 0 ? l : -l, v);
    for (int i = n; i >= 1; --i) v = apply_local(LocalKind::cap_n, i, v);

    auto it = v.coeffs.find(0u);
    return it == v.coeffs.end() ? TauLaurent() : it->second;
}

TauLaurent jhat_oracle(const BraidWord& b) {
    return TauLaurent::writhe_normalizer(writhe(b)) * evaluate_closed_braid(b);
}

}  // namespace ebraid
