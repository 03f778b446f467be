#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ebraid/braid.hpp"
#include "ebraid/skein.hpp"

namespace ebraid {

/// One fully resolved closed diagram. Circles are the connected components of
/// the closure; they are listed in canonical order (ascending minimal arc id,
/// arcs being the grid nodes of the resolved braid diagram enumerated level by
/// level, bottom to top).
struct CubeVertex {
    State state;
    int circles = 0;
    std::vector<int> circle_min_node;        // canonical order
    std::vector<std::int16_t> node_circle;   // node id -> canonical circle index
};

/// A saddle between two resolutions differing in one crossing (0 -> 1).
struct CubeEdge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    int crossing = 0;   // 0-based index of the flipped crossing
    bool merge = false; // true: two source circles fuse; false: one splits
    int src_a = -1;     // involved source circles, canonical indices, src_a < src_b
    int src_b = -1;     // merge only
    int tgt_c = -1;     // involved target circles, canonical indices, tgt_c < tgt_d
    int tgt_d = -1;     // split only
    int sign = 1;       // +-1, set by sign_assignment
};

/// Hard cap on cube construction (2^20 vertices).
inline constexpr int kMaxCubeCrossings = 20;

/// The cube of resolutions with the e-graded shift bookkeeping attached.
struct ShiftedCube {
    BraidWord braid;
    int n_pos = 0;
    int n_neg = 0;
    std::vector<CubeVertex> vertices;              // indexed by state bits
    std::vector<std::vector<CubeEdge>> out_edges;  // per vertex, ascending crossing

    int crossings() const { return braid.crossings(); }
    int writhe_value() const { return n_pos - n_neg; }
    /// Cohomological index of a vertex: (number of 1-resolutions) - n_neg.
    int hom_degree(std::uint32_t state) const;
    int min_degree() const { return -n_neg; }
    int max_degree() const { return n_pos; }
    /// Per-vertex e-degree shift (-n_neg + r, n_pos - r).
    std::pair<int, int> vertex_shift(std::uint32_t state) const;
    /// Global shift (wr, 2wr).
    std::pair<int, int> global_shift() const;
};

/// Resolve all 2^m states and classify all saddles. Signs are assigned
/// immediately (the lexicographic rule). Throws TooManyCrossings beyond the cap.
ShiftedCube build_cube(const BraidWord& b);

/// The deterministic sign rule eps(z -> w) = (-1)^{number of 1s in z before
/// the flipped crossing}; every square face then has edge-sign product -1.
void sign_assignment(ShiftedCube& cube);

/// True when every edge is degree-preserving once the Frobenius map degree
/// (-1, 1) is combined with the shift difference (1, -1) along the edge, and
/// the homological support is exactly -n_neg .. n_pos.
bool degree_audit(const ShiftedCube& cube);

/// For an edge, the target canonical index of each uninvolved source circle
/// (involved ones carry -1; their images are the edge's tgt fields).
std::vector<int> circle_correspondence(const ShiftedCube& cube, const CubeEdge& edge);

/// Debug dump: states, circle counts, edge kinds and signs.
std::string cube_to_json(const ShiftedCube& cube);

}  // namespace ebraid
