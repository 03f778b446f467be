#include "ebraid/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace ebraid {

namespace {

struct GridUnionFind {
    std::vector<int> parent;
    explicit GridUnionFind(int n) : parent(static_cast<std::size_t>(n)) {
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

// Resolve one state of the closed diagram and hand out canonical circles.
CubeVertex resolve_vertex(const BraidWord& b, const State& z) {
    int n = b.strands, m = b.crossings();
    GridUnionFind uf((m + 1) * n);
    for (int j = 0; j < m; ++j) {
        int letter = b.letters[static_cast<std::size_t>(j)];
        int i0 = (letter > 0 ? letter : -letter) - 1;
        int lo = j * n, hi = (j + 1) * n;
        bool cupcap = (letter > 0) == (z.bit(j) == 1);
        for (int pos = 0; pos < n; ++pos)
            if (pos != i0 && pos != i0 + 1) uf.unite(lo + pos, hi + pos);
        if (cupcap) {
            uf.unite(lo + i0, lo + i0 + 1);
            uf.unite(hi + i0, hi + i0 + 1);
        } else {
            uf.unite(lo + i0, hi + i0);
            uf.unite(lo + i0 + 1, hi + i0 + 1);
        }
    }
    for (int pos = 0; pos < n; ++pos) uf.unite(m * n + pos, pos);

    CubeVertex v;
    v.state = z;
    int nodes = (m + 1) * n;
    v.node_circle.assign(static_cast<std::size_t>(nodes), -1);
    // Roots here are minimal node ids of their components (union keeps the
    // smaller id as root), so scanning nodes ascending yields canonical order.
    for (int node = 0; node < nodes; ++node) {
        int r = uf.find(node);
        if (r == node) {
            v.node_circle[static_cast<std::size_t>(node)] =
                static_cast<std::int16_t>(v.circle_min_node.size());
            v.circle_min_node.push_back(node);
        }
    }
    for (int node = 0; node < nodes; ++node)
        v.node_circle[static_cast<std::size_t>(node)] = v.node_circle[static_cast<std::size_t>(uf.find(node))];
    v.circles = static_cast<int>(v.circle_min_node.size());
    return v;
}

}  // namespace

int ShiftedCube::hom_degree(std::uint32_t state) const {
    return std::popcount(state) - n_neg;
}

std::pair<int, int> ShiftedCube::vertex_shift(std::uint32_t state) const {
    int r = std::popcount(state);
    return {-n_neg + r, n_pos - r};
}

std::pair<int, int> ShiftedCube::global_shift() const {
    int w = writhe_value();
    return {w, 2 * w};
}

ShiftedCube build_cube(const BraidWord& b) {
    int m = b.crossings();
    if (m > kMaxCubeCrossings)
        throw TooManyCrossings("cube capped at " + std::to_string(kMaxCubeCrossings) +
                               " crossings, braid has " + std::to_string(m));

    ShiftedCube cube;
    cube.braid = b;
    cube.n_pos = positive_crossings(b);
    cube.n_neg = negative_crossings(b);

    std::uint32_t count = 1u << m;
    cube.vertices.reserve(count);
    for (std::uint32_t bits = 0; bits < count; ++bits)
        cube.vertices.push_back(resolve_vertex(b, State(bits, m)));

    cube.out_edges.assign(count, {});
    int n = b.strands;
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        const CubeVertex& src = cube.vertices[bits];
        for (int j = 0; j < m; ++j) {
            if ((bits >> j) & 1u) continue;
            std::uint32_t to = bits | (1u << j);
            const CubeVertex& dst = cube.vertices[to];

            int letter = b.letters[static_cast<std::size_t>(j)];
            int i0 = (letter > 0 ? letter : -letter) - 1;
            int local[4] = {j * n + i0, j * n + i0 + 1, (j + 1) * n + i0, (j + 1) * n + i0 + 1};

            CubeEdge e;
            e.from = bits;
            e.to = to;
            e.crossing = j;
            int s0 = src.node_circle[static_cast<std::size_t>(local[0])];
            int s_other = -1;
            for (int t = 1; t < 4; ++t) {
                int c = src.node_circle[static_cast<std::size_t>(local[t])];
                if (c != s0) s_other = c;
            }
            int d0 = dst.node_circle[static_cast<std::size_t>(local[0])];
            int d_other = -1;
            for (int t = 1; t < 4; ++t) {
                int c = dst.node_circle[static_cast<std::size_t>(local[t])];
                if (c != d0) d_other = c;
            }
            e.merge = s_other >= 0;
            if (e.merge) {
                e.src_a = std::min(s0, s_other);
                e.src_b = std::max(s0, s_other);
                e.tgt_c = d0;
            } else {
                e.src_a = s0;
                e.tgt_c = std::min(d0, d_other);
                e.tgt_d = std::max(d0, d_other);
            }
            cube.out_edges[bits].push_back(e);
        }
    }
    sign_assignment(cube);
    return cube;
}

void sign_assignment(ShiftedCube& cube) {
    for (auto& edges : cube.out_edges) {
        for (CubeEdge& e : edges) {
            std::uint32_t below = e.from & ((1u << e.crossing) - 1u);
            e.sign = (std::popcount(below) & 1) ? -1 : 1;
        }
    }
}

bool degree_audit(const ShiftedCube& cube) {
    for (const auto& edges : cube.out_edges) {
        for (const CubeEdge& e : edges) {
            auto [q_from, t_from] = cube.vertex_shift(e.from);
            auto [q_to, t_to] = cube.vertex_shift(e.to);
            int shift_q = q_to - q_from, shift_t = t_to - t_from;
            // Frobenius saddle maps have degree (-1, 1); the shift difference
            // along any edge must cancel it exactly.
            if (shift_q != 1 || shift_t != -1) return false;
            if ((-1 + shift_q) != 0 || ((1 + shift_t) % 4) != 0) return false;
        }
    }
    for (std::uint32_t bits = 0; bits < cube.vertices.size(); ++bits) {
        int i = cube.hom_degree(bits);
        if (i < cube.min_degree() || i > cube.max_degree()) return false;
    }
    return true;
}

std::vector<int> circle_correspondence(const ShiftedCube& cube, const CubeEdge& edge) {
    const CubeVertex& src = cube.vertices[edge.from];
    const CubeVertex& dst = cube.vertices[edge.to];
    std::vector<int> target_of(static_cast<std::size_t>(src.circles), -1);
    for (int t = 0; t < dst.circles; ++t) {
        if (t == edge.tgt_c || (!edge.merge && t == edge.tgt_d)) continue;
        int node = dst.circle_min_node[static_cast<std::size_t>(t)];
        int s = src.node_circle[static_cast<std::size_t>(node)];
        target_of[static_cast<std::size_t>(s)] = t;
    }
    return target_of;
}

std::string cube_to_json(const ShiftedCube& cube) {
    std::ostringstream out;
    out << "{\"strands\":" << cube.braid.strands << ",\"word\":\"" << render(cube.braid)
        << "\",\"n_pos\":" << cube.n_pos << ",\"n_neg\":" << cube.n_neg << ",\"vertices\":[";
    for (std::uint32_t bits = 0; bits < cube.vertices.size(); ++bits) {
        if (bits) out << ",";
        out << "{\"state\":" << bits << ",\"circles\":" << cube.vertices[bits].circles << "}";
    }
    out << "],\"edges\":[";
    bool first = true;
    for (const auto& edges : cube.out_edges) {
        for (const CubeEdge& e : edges) {
            if (!first) out << ",";
            first = false;
            out << "{\"from\":" << e.from << ",\"to\":" << e.to << ",\"crossing\":" << e.crossing
                << ",\"kind\":\"" << (e.merge ? "merge" : "split") << "\",\"sign\":" << e.sign << "}";
        }
    }
    out << "]}";
    return out.str();
}

}  // namespace ebraid
