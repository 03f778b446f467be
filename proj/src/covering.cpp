#include "ebraid/covering.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ebraid {

bool CovFrobeniusSpec::specializes_to_even() {
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b)
            if (multiply(a, b) != FrobeniusSpec::multiply(a, b)) return false;
        std::vector<std::pair<int, int>> cov, even = FrobeniusSpec::comultiply(a);
        for (const auto& br : comultiply(a)) {
            if (br.coeff.specialize(1) != 1) return false;
            cov.emplace_back(br.first, br.second);
        }
        std::sort(cov.begin(), cov.end());
        std::sort(even.begin(), even.end());
        if (cov != even) return false;
        if ((counit(a).specialize(1) != 0) != (FrobeniusSpec::counit(a) != 0)) return false;
    }
    return true;
}

void PiComplex::check_d_squared() const {
    for (int k = 0; k + 1 < static_cast<int>(diff.size()); ++k) {
        const auto& d0 = diff[static_cast<std::size_t>(k)];
        const auto& d1 = diff[static_cast<std::size_t>(k + 1)];
        std::map<int, PiScalar> acc;
        for (std::size_t col = 0; col < d0.size(); ++col) {
            acc.clear();
            for (const auto& [mid, c0] : d0[col])
                for (const auto& [row, c1] : d1[static_cast<std::size_t>(mid)]) acc[row] += c0 * c1;
            for (const auto& [row, v] : acc)
                if (!v.is_zero())
                    throw DifferentialNotSquareZero("covering d^2 != 0 at level " + std::to_string(k) +
                                                    ", column " + std::to_string(col));
        }
    }
}

bool PiComplex::degrees_preserved() const {
    for (int k = 0; k + 1 < levels(); ++k) {
        const auto& src = gens[static_cast<std::size_t>(k)];
        const auto& dst = gens[static_cast<std::size_t>(k + 1)];
        for (std::size_t col = 0; col < diff[static_cast<std::size_t>(k)].size(); ++col)
            for (const auto& [row, c] : diff[static_cast<std::size_t>(k)][col]) {
                (void)c;
                if (src[col].q != dst[static_cast<std::size_t>(row)].q ||
                    src[col].tau != dst[static_cast<std::size_t>(row)].tau)
                    return false;
            }
    }
    return true;
}

std::string PiComplex::to_json() const {
    std::ostringstream out;
    out << "{\"min_degree\":" << min_degree << ",\"levels\":[";
    for (int k = 0; k < levels(); ++k) {
        if (k) out << ",";
        out << "{\"i\":" << degree_of_level(k) << ",\"generators\":[";
        const auto& gs = gens[static_cast<std::size_t>(k)];
        for (std::size_t g = 0; g < gs.size(); ++g) {
            if (g) out << ",";
            out << "{\"q\":" << gs[g].q << ",\"tau\":" << gs[g].tau
                << ",\"parity\":" << (std::popcount(gs[g].labels) & 1) << "}";
        }
        out << "]";
        if (k + 1 < levels()) {
            out << ",\"differential\":[";
            const auto& d = diff[static_cast<std::size_t>(k)];
            bool first = true;
            for (std::size_t col = 0; col < d.size(); ++col)
                for (const auto& [row, c] : d[col]) {
                    if (!first) out << ",";
                    first = false;
                    out << "{\"col\":" << col << ",\"row\":" << row << ",\"a\":" << c.a << ",\"b\":" << c.b
                        << "}";
                }
            out << "]";
        }
        out << "}";
    }
    out << "]}";
    return out.str();
}

namespace {

int label_of(std::uint32_t labels, int circle, int circles) {
    return static_cast<int>((labels >> (circles - 1 - circle)) & 1u);
}

std::uint32_t with_label(std::uint32_t labels, int circle, int circles, int value) {
    std::uint32_t bit = 1u << (circles - 1 - circle);
    return value ? (labels | bit) : (labels & ~bit);
}

// pi-exponent of the reorder coefficient: pairs of X-labelled factors whose
// relative order flips between `current` (sequence of target circle indices)
// and ascending target order.
int inversion_parity(const std::vector<int>& current_targets, const std::vector<int>& labels) {
    int e = 0;
    for (std::size_t u = 0; u < current_targets.size(); ++u)
        for (std::size_t v = u + 1; v < current_targets.size(); ++v)
            if (current_targets[u] > current_targets[v]) e += labels[u] & labels[v] & 1;
    return e & 1;
}

}  // namespace

std::vector<std::vector<std::pair<std::uint32_t, PiScalar>>> cov_edge_columns(const ShiftedCube& cube,
                                                                              const CubeEdge& edge) {
    const CubeVertex& src = cube.vertices[edge.from];
    const CubeVertex& dst = cube.vertices[edge.to];
    std::vector<int> target_of = circle_correspondence(cube, edge);

    std::vector<std::vector<std::pair<std::uint32_t, PiScalar>>> columns(
        static_cast<std::size_t>(1u) << src.circles);

    for (std::uint32_t L = 0; L < (1u << src.circles); ++L) {
        std::vector<int> lab(static_cast<std::size_t>(src.circles));
        for (int s = 0; s < src.circles; ++s) lab[static_cast<std::size_t>(s)] = label_of(L, s, src.circles);

        std::uint32_t carried = 0;
        for (int s = 0; s < src.circles; ++s)
            if (target_of[static_cast<std::size_t>(s)] >= 0)
                carried = with_label(carried, target_of[static_cast<std::size_t>(s)], dst.circles,
                                     lab[static_cast<std::size_t>(s)]);

        auto& column = columns[L];
        if (edge.merge) {
            int prod = CovFrobeniusSpec::multiply(lab[static_cast<std::size_t>(edge.src_a)],
                                                  lab[static_cast<std::size_t>(edge.src_b)]);
            if (prod < 0) continue;
            // Transport factor src_b leftwards to sit beside src_a.
            int e = 0;
            for (int j = edge.src_a + 1; j < edge.src_b; ++j)
                e += lab[static_cast<std::size_t>(edge.src_b)] & lab[static_cast<std::size_t>(j)] & 1;
            // Sequence after m, as target circle indices with labels.
            std::vector<int> seq_targets, seq_labels;
            for (int s = 0; s < src.circles; ++s) {
                if (s == edge.src_b) continue;
                if (s == edge.src_a) {
                    seq_targets.push_back(edge.tgt_c);
                    seq_labels.push_back(prod);
                } else {
                    seq_targets.push_back(target_of[static_cast<std::size_t>(s)]);
                    seq_labels.push_back(lab[static_cast<std::size_t>(s)]);
                }
            }
            e += inversion_parity(seq_targets, seq_labels);
            std::uint32_t out = with_label(carried, edge.tgt_c, dst.circles, prod);
            column.emplace_back(out, PiScalar(1).times_pi_power(e));
        } else {
            // Delta is odd: moving it to position src_a costs the prefix parity.
            int prefix = 0;
            for (int j = 0; j < edge.src_a; ++j) prefix += lab[static_cast<std::size_t>(j)] & 1;
            for (const auto& branch :
                 CovFrobeniusSpec::comultiply(lab[static_cast<std::size_t>(edge.src_a)])) {
                int e = prefix & 1;
                if (branch.coeff == PiScalar::pi()) e ^= 1;

                std::vector<int> seq_targets, seq_labels;
                for (int s = 0; s < src.circles; ++s) {
                    if (s == edge.src_a) {
                        seq_targets.push_back(edge.tgt_c);
                        seq_labels.push_back(branch.first);
                        seq_targets.push_back(edge.tgt_d);
                        seq_labels.push_back(branch.second);
                    } else {
                        seq_targets.push_back(target_of[static_cast<std::size_t>(s)]);
                        seq_labels.push_back(lab[static_cast<std::size_t>(s)]);
                    }
                }
                e ^= inversion_parity(seq_targets, seq_labels);
                std::uint32_t out = with_label(carried, edge.tgt_c, dst.circles, branch.first);
                out = with_label(out, edge.tgt_d, dst.circles, branch.second);
                column.emplace_back(out, PiScalar(1).times_pi_power(e));
            }
        }
    }
    return columns;
}

namespace {

using CovColumns = std::vector<std::vector<std::pair<std::uint32_t, PiScalar>>>;

CovColumns compose(const CovColumns& first, const CovColumns& second) {
    CovColumns out(first.size());
    for (std::size_t col = 0; col < first.size(); ++col) {
        std::map<std::uint32_t, PiScalar> acc;
        for (const auto& [mid, c0] : first[col])
            for (const auto& [row, c1] : second[mid]) acc[row] += c0 * c1;
        for (const auto& [row, v] : acc)
            if (!v.is_zero()) out[col].emplace_back(row, v);
    }
    return out;
}

bool equal_up_to(const CovColumns& a, const CovColumns& b, int pi_exp) {
    if (a.size() != b.size()) return false;
    for (std::size_t col = 0; col < a.size(); ++col) {
        std::map<std::uint32_t, PiScalar> diff;
        for (const auto& [row, v] : a[col]) diff[row] += v;
        for (const auto& [row, v] : b[col]) diff[row] -= v.times_pi_power(pi_exp);
        for (const auto& [row, v] : diff)
            if (!v.is_zero()) return false;
    }
    return true;
}

}  // namespace

CovSigns cov_sign_assignment(const ShiftedCube& cube) {
    int m = cube.crossings();
    std::uint32_t count = 1u << m;

    // Cache the unsigned block of every edge, with a flat index per edge.
    std::map<std::pair<std::uint32_t, int>, CovColumns> blocks;
    std::map<std::pair<std::uint32_t, int>, int> edge_index;
    int edge_count = 0;
    for (std::uint32_t bits = 0; bits < count; ++bits)
        for (const CubeEdge& e : cube.out_edges[bits]) {
            blocks[{bits, e.crossing}] = cov_edge_columns(cube, e);
            edge_index[{bits, e.crossing}] = edge_count++;
        }

    // Face defects: composite(i then j) = pi^{defect} * composite(j then i).
    // When every entry of the composites is a multiple of (1 + pi), both
    // defects are valid (pi * (1+pi) = 1+pi) and the face constrains nothing.
    struct FaceConstraint {
        int edges[4];
        int rhs;
    };
    std::vector<FaceConstraint> constraints;
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        for (int i = 0; i < m; ++i) {
            if ((bits >> i) & 1u) continue;
            for (int j = i + 1; j < m; ++j) {
                if ((bits >> j) & 1u) continue;
                CovColumns a = compose(blocks[{bits, i}], blocks[{bits | (1u << i), j}]);
                CovColumns b = compose(blocks[{bits, j}], blocks[{bits | (1u << j), i}]);
                bool d0 = equal_up_to(a, b, 0);
                bool d1 = equal_up_to(a, b, 1);
                if (!d0 && !d1)
                    throw SignSystemInconsistent("face defect is not a {1, pi} unit at state " +
                                                 std::to_string(bits) + ", crossings " +
                                                 std::to_string(i) + "," + std::to_string(j));
                if (d0 && d1) continue;  // ambiguous face: unconstrained
                FaceConstraint fc;
                fc.edges[0] = edge_index.at({bits, i});
                fc.edges[1] = edge_index.at({bits | (1u << i), j});
                fc.edges[2] = edge_index.at({bits, j});
                fc.edges[3] = edge_index.at({bits | (1u << j), i});
                fc.rhs = d1 ? 1 : 0;
                constraints.push_back(fc);
            }
        }
    }

    // Solve for the pi-exponents x(e) over GF(2): for each constrained face,
    // x(e1)+x(e2)+x(e3)+x(e4) = defect. Dense bitset elimination, rhs packed
    // as one extra bit.
    std::vector<int> x(static_cast<std::size_t>(edge_count), 0);
    {
        std::size_t words = static_cast<std::size_t>(edge_count + 1 + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(constraints.size());
        for (const FaceConstraint& fc : constraints) {
            std::vector<std::uint64_t> row(words, 0);
            for (int k = 0; k < 4; ++k)
                row[static_cast<std::size_t>(fc.edges[k] / 64)] ^=
                    (1ULL << (fc.edges[k] % 64));
            if (fc.rhs)
                row[static_cast<std::size_t>(edge_count / 64)] ^= (1ULL << (edge_count % 64));
            rows.push_back(std::move(row));
        }
        std::vector<int> pivot_of_row;
        std::vector<std::size_t> basis_rows;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto& row = rows[r];
            for (std::size_t b = 0; b < basis_rows.size(); ++b) {
                int p = pivot_of_row[b];
                if ((row[static_cast<std::size_t>(p / 64)] >> (p % 64)) & 1ULL)
                    for (std::size_t w = 0; w < words; ++w) row[w] ^= rows[basis_rows[b]][w];
            }
            int pivot = -1;
            for (int v = 0; v < edge_count && pivot < 0; ++v)
                if ((row[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1ULL) pivot = v;
            if (pivot < 0) {
                if ((row[static_cast<std::size_t>(edge_count / 64)] >> (edge_count % 64)) & 1ULL)
                    throw SignSystemInconsistent("pi-sign system has no solution");
                continue;
            }
            basis_rows.push_back(r);
            pivot_of_row.push_back(pivot);
        }
        // Back-substitute with free variables set to 0.
        for (std::size_t b = basis_rows.size(); b-- > 0;) {
            const auto& row = rows[basis_rows[b]];
            int rhs = static_cast<int>((row[static_cast<std::size_t>(edge_count / 64)] >>
                                        (edge_count % 64)) & 1ULL);
            for (int v = pivot_of_row[b] + 1; v < edge_count; ++v)
                if ((row[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1ULL)
                    rhs ^= x[static_cast<std::size_t>(v)];
            x[static_cast<std::size_t>(pivot_of_row[b])] = rhs;
        }
    }

    // Edge unit: lexicographic sign times pi^{x(e)}; at pi = +1 this is
    // literally the even theory's rule.
    CovSigns signs;
    signs.unit.assign(count, {});
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        for (const CubeEdge& e : cube.out_edges[bits]) {
            PiScalar unit(e.sign);
            signs.unit[bits].push_back(
                unit.times_pi_power(x[static_cast<std::size_t>(edge_index.at({bits, e.crossing}))]));
        }
    }

    // Full verification: every face anticommutes over Z^pi with these units.
    auto unit_of = [&cube, &signs](std::uint32_t state, int crossing) {
        const auto& edges = cube.out_edges[state];
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k].crossing == crossing) return signs.unit[state][k];
        throw SignSystemInconsistent("missing cube edge");
    };
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        for (int i = 0; i < m; ++i) {
            if ((bits >> i) & 1u) continue;
            for (int j = i + 1; j < m; ++j) {
                if ((bits >> j) & 1u) continue;
                PiScalar ua = unit_of(bits, i) * unit_of(bits | (1u << i), j);
                PiScalar ub = unit_of(bits, j) * unit_of(bits | (1u << j), i);
                CovColumns a = compose(blocks[{bits, i}], blocks[{bits | (1u << i), j}]);
                CovColumns b = compose(blocks[{bits, j}], blocks[{bits | (1u << j), i}]);
                for (std::size_t col = 0; col < a.size(); ++col) {
                    std::map<std::uint32_t, PiScalar> acc;
                    for (const auto& [row, v] : a[col]) acc[row] += ua * v;
                    for (const auto& [row, v] : b[col]) acc[row] += ub * v;
                    for (const auto& [row, v] : acc)
                        if (!v.is_zero())
                            throw SignSystemInconsistent("face fails to anticommute at state " +
                                                         std::to_string(bits) + ", crossings " +
                                                         std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
    }
    return signs;
}

PiComplex build_cov_complex(const ShiftedCube& cube) {
    int m = cube.crossings();
    std::uint32_t count = 1u << m;
    int levels = m + 1;

    ComplexSkeleton skel = complex_skeleton(cube);
    PiComplex c;
    c.min_degree = skel.min_degree;
    c.gens = std::move(skel.gens);
    const std::vector<int>& base = skel.vertex_base;
    c.diff.assign(static_cast<std::size_t>(levels > 0 ? levels - 1 : 0), {});
    for (int k = 0; k + 1 < levels; ++k)
        c.diff[static_cast<std::size_t>(k)].assign(c.gens[static_cast<std::size_t>(k)].size(), {});

    CovSigns signs = cov_sign_assignment(cube);

    for (std::uint32_t bits = 0; bits < count; ++bits) {
        int k = std::popcount(bits);
        const auto& edges = cube.out_edges[bits];
        for (std::size_t eidx = 0; eidx < edges.size(); ++eidx) {
            const CubeEdge& e = edges[eidx];
            PiScalar unit = signs.unit[bits][eidx];
            CovColumns cols = cov_edge_columns(cube, e);
            for (std::uint32_t L = 0; L < cols.size(); ++L) {
                int col = base[bits] + static_cast<int>(L);
                auto& column = c.diff[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
                for (const auto& [out, coeff] : cols[L])
                    column.emplace_back(base[e.to] + static_cast<int>(out), unit * coeff);
            }
        }
    }
    for (auto& level : c.diff)
        for (auto& column : level)
            std::sort(column.begin(), column.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });

    c.check_d_squared();
    return c;
}

PiComplex build_cov_complex(const BraidWord& b) { return build_cov_complex(build_cube(b)); }

EGradedComplex specialize_pi(const PiComplex& c, int s) {
    EGradedComplex out;
    out.min_degree = c.min_degree;
    out.gens = c.gens;
    out.diff.assign(c.diff.size(), {});
    for (std::size_t k = 0; k < c.diff.size(); ++k) {
        out.diff[k].assign(c.diff[k].size(), {});
        for (std::size_t col = 0; col < c.diff[k].size(); ++col)
            for (const auto& [row, v] : c.diff[k][col]) {
                std::int64_t value = v.specialize(s);
                if (value != 0) out.diff[k][col].emplace_back(row, static_cast<int>(value));
            }
    }
    out.check_d_squared();
    return out;
}

}  // namespace ebraid
