#include "ebraid/skein.hpp"

#include <bit>
#include <numeric>

namespace ebraid {

namespace {

// The resolved diagram of an n-strand, m-letter braid lives on the grid of
// nodes (level, strand position), level 0..m bottom to top. Each resolution
// wires consecutive levels; the trace closure joins level m back to level 0.
// Arcs are identified with grid nodes (node id = level*n + pos); a circle's
// canonical id is its minimal node id.
struct FlatUnionFind {
    std::vector<int> parent;
    explicit FlatUnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[static_cast<std::size_t>(b)] = a;
        else parent[static_cast<std::size_t>(a)] = b;
    }
};

// True when crossing letter `l` with resolution bit `bit` smooths to the
// cup-cap diagram (otherwise to the identity wiring).
bool resolves_to_cupcap(int letter, int bit) { return (letter > 0) == (bit == 1); }

void wire_level(FlatUnionFind& uf, int n, int level, int letter, int bit) {
    int i0 = (letter > 0 ? letter : -letter) - 1;
    int lo = level * n, hi = (level + 1) * n;
    for (int pos = 0; pos < n; ++pos)
        if (pos != i0 && pos != i0 + 1) uf.unite(lo + pos, hi + pos);
    if (resolves_to_cupcap(letter, bit)) {
        uf.unite(lo + i0, lo + i0 + 1);
        uf.unite(hi + i0, hi + i0 + 1);
    } else {
        uf.unite(lo + i0, hi + i0);
        uf.unite(lo + i0 + 1, hi + i0 + 1);
    }
}

}  // namespace

int State::weight() const { return std::popcount(bits & ((size >= 32 ? ~0u : (1u << size) - 1u))); }

ResolutionOutcome resolve_state(const BraidWord& b, const State& z) {
    if (z.size != b.crossings()) throw LengthMismatch("state length must equal crossing count");
    int n = b.strands, m = b.crossings();
    FlatUnionFind uf((m + 1) * n);
    for (int j = 0; j < m; ++j) wire_level(uf, n, j, b.letters[static_cast<std::size_t>(j)], z.bit(j));

    // Components holding boundary nodes are the strands of the residual
    // diagram; boundary-free components are internal loops.
    std::vector<int> first_point((m + 1) * n, -1);
    std::vector<int> pairing(static_cast<std::size_t>(2 * n), -1);
    for (int pos = 0; pos < n; ++pos) {
        int r = uf.find(pos);
        first_point[static_cast<std::size_t>(r)] = pos;  // bottom boundary point `pos`
    }
    for (int pos = 0; pos < n; ++pos) {
        int r = uf.find(m * n + pos);
        int mine = n + pos;  // top boundary point
        if (first_point[static_cast<std::size_t>(r)] < 0) {
            first_point[static_cast<std::size_t>(r)] = mine;
        } else {
            int other = first_point[static_cast<std::size_t>(r)];
            if (pairing[static_cast<std::size_t>(other)] < 0) {
                pairing[static_cast<std::size_t>(other)] = mine;
                pairing[static_cast<std::size_t>(mine)] = other;
            }
        }
    }
    // Two bottom points may share a component; sweep again to pair those.
    for (int pos = 0; pos < n; ++pos) {
        if (pairing[static_cast<std::size_t>(pos)] >= 0) continue;
        for (int other = pos + 1; other < n; ++other) {
            if (pairing[static_cast<std::size_t>(other)] >= 0) continue;
            if (uf.find(pos) == uf.find(other)) {
                pairing[static_cast<std::size_t>(pos)] = other;
                pairing[static_cast<std::size_t>(other)] = pos;
                break;
            }
        }
    }
    // And unmatched top points likewise.
    for (int pos = 0; pos < n; ++pos) {
        int mine = n + pos;
        if (pairing[static_cast<std::size_t>(mine)] >= 0) continue;
        for (int other = pos + 1; other < n; ++other) {
            int theirs = n + other;
            if (pairing[static_cast<std::size_t>(theirs)] >= 0) continue;
            if (uf.find(m * n + pos) == uf.find(m * n + other)) {
                pairing[static_cast<std::size_t>(mine)] = theirs;
                pairing[static_cast<std::size_t>(theirs)] = mine;
                break;
            }
        }
    }

    int internal_loops = 0;
    std::vector<char> seen(static_cast<std::size_t>((m + 1) * n), 0);
    for (int node = 0; node < (m + 1) * n; ++node) {
        int r = uf.find(node);
        if (seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = 1;
        if (first_point[static_cast<std::size_t>(r)] < 0) ++internal_loops;
    }

    PlanarMatching residual(n, std::move(pairing));
    int circles = internal_loops + closure_loop_count(residual);
    return ResolutionOutcome{circles, std::move(residual)};
}

int closed_circle_count(const BraidWord& b, const State& z) {
    if (z.size != b.crossings()) throw LengthMismatch("state length must equal crossing count");
    int n = b.strands, m = b.crossings();
    FlatUnionFind uf((m + 1) * n);
    for (int j = 0; j < m; ++j) wire_level(uf, n, j, b.letters[static_cast<std::size_t>(j)], z.bit(j));
    for (int pos = 0; pos < n; ++pos) uf.unite(m * n + pos, pos);
    int circles = 0;
    for (int node = 0; node < (m + 1) * n; ++node)
        if (uf.find(node) == node) ++circles;
    return circles;
}

TauLaurent state_weight(const BraidWord& b, const State& z) {
    if (z.size != b.crossings()) throw LengthMismatch("state length must equal crossing count");
    int tau_exp = 0, q_exp = 0, sign = 1;
    for (int j = 0; j < b.crossings(); ++j) {
        bool positive = b.letters[static_cast<std::size_t>(j)] > 0;
        if (positive) {
            if (z.bit(j) == 0) tau_exp += 1;       // tau
            else { q_exp += 1; sign = -sign; }     // -q
        } else {
            if (z.bit(j) == 0) { q_exp -= 1; sign = -sign; }  // -q^{-1}
            else tau_exp += 3;                                // tau^3
        }
    }
    return TauLaurent::monomial(CyclotomicInt4::mod4(tau_exp), q_exp, sign);
}

TauLaurent bracket(const BraidWord& b) {
    int m = b.crossings();
    if (m > kMaxStateSumCrossings)
        throw TooManyCrossings("state sum capped at " + std::to_string(kMaxStateSumCrossings) +
                               " crossings, braid has " + std::to_string(m));
    // Cache powers of the circle value d up to the largest possible count.
    std::vector<TauLaurent> d_pow;
    d_pow.push_back(TauLaurent::one());
    for (int k = 1; k <= b.strands + m; ++k) d_pow.push_back(d_pow.back() * TauLaurent::circle_value());

    TauLaurent acc;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        State z(bits, m);
        int circles = closed_circle_count(b, z);

        int tau_exp = 0, q_exp = 0, sign = 1;
        for (int j = 0; j < m; ++j) {
            bool positive = b.letters[static_cast<std::size_t>(j)] > 0;
            if (positive) {
                if (z.bit(j) == 0) tau_exp += 1;
                else { q_exp += 1; sign = -sign; }
            } else {
                if (z.bit(j) == 0) { q_exp -= 1; sign = -sign; }
                else tau_exp += 3;
            }
        }
        acc += d_pow[static_cast<std::size_t>(circles)].times_monomial(CyclotomicInt4::mod4(tau_exp),
                                                                       q_exp, sign);
    }
    return acc;
}

TauLaurent bracket_via_tl(const BraidWord& b) { return tl_closure_eval(rho_image(b)); }

TauLaurent jhat(const BraidWord& b) { return TauLaurent::writhe_normalizer(writhe(b)) * bracket(b); }

TauLaurent jhat_via_tl(const BraidWord& b) {
    return TauLaurent::writhe_normalizer(writhe(b)) * bracket_via_tl(b);
}

}  // namespace ebraid
