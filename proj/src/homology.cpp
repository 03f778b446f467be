#include "ebraid/homology.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>

namespace ebraid {

bool FrobeniusSpec::axioms_hold() {
    // Multiplication: unit law, commutativity, associativity.
    for (int a = 0; a < 2; ++a) {
        if (multiply(unit(), a) != a || multiply(a, unit()) != a) return false;
        for (int b = 0; b < 2; ++b) {
            if (multiply(a, b) != multiply(b, a)) return false;
            for (int c = 0; c < 2; ++c) {
                int left = multiply(a, b) < 0 ? -1 : multiply(multiply(a, b), c);
                int right = multiply(b, c) < 0 ? -1 : multiply(a, multiply(b, c));
                if (left != right) return false;
            }
        }
    }
    // Coassociativity: both refinements of Delta give X-count-sorted equal
    // multisets of basis triples.
    for (int a = 0; a < 2; ++a) {
        std::vector<std::tuple<int, int, int>> left, right;
        for (auto [x, y] : comultiply(a))
            for (auto [x1, x2] : comultiply(x)) left.emplace_back(x1, x2, y);
        for (auto [x, y] : comultiply(a))
            for (auto [y1, y2] : comultiply(y)) right.emplace_back(x, y1, y2);
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        if (left != right) return false;
    }
    // Counit: (eps (x) id) Delta = id.
    for (int a = 0; a < 2; ++a) {
        int acc = 0;  // coefficient of each basis element after pairing
        int basis = -1;
        for (auto [x, y] : comultiply(a)) {
            if (counit(x)) {
                ++acc;
                basis = y;
            }
        }
        if (acc != 1 || basis != a) return false;
    }
    // Frobenius relation: Delta m = (m (x) id)(id (x) Delta) on basis pairs.
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            std::vector<std::pair<int, int>> left, right;
            if (int ab = multiply(a, b); ab >= 0)
                for (auto [x, y] : comultiply(ab)) left.emplace_back(x, y);
            for (auto [b1, b2] : comultiply(b))
                if (int ab1 = multiply(a, b1); ab1 >= 0) right.emplace_back(ab1, b2);
            std::sort(left.begin(), left.end());
            std::sort(right.begin(), right.end());
            if (left != right) return false;
        }
    }
    return true;
}

namespace {

int label_of(std::uint32_t labels, int circle, int circles) {
    return static_cast<int>((labels >> (circles - 1 - circle)) & 1u);
}

std::uint32_t with_label(std::uint32_t labels, int circle, int circles, int value) {
    std::uint32_t bit = 1u << (circles - 1 - circle);
    return value ? (labels | bit) : (labels & ~bit);
}

}  // namespace

void EGradedComplex::check_d_squared() const {
    for (int k = 0; k + 1 < static_cast<int>(diff.size()); ++k) {
        const SparseIntColumns& d0 = diff[static_cast<std::size_t>(k)];
        const SparseIntColumns& d1 = diff[static_cast<std::size_t>(k + 1)];
        std::map<int, long long> acc;
        for (std::size_t col = 0; col < d0.size(); ++col) {
            acc.clear();
            for (const auto& [mid, c0] : d0[col])
                for (const auto& [row, c1] : d1[static_cast<std::size_t>(mid)])
                    acc[row] += static_cast<long long>(c0) * c1;
            for (const auto& [row, v] : acc)
                if (v != 0)
                    throw DifferentialNotSquareZero("d^2 != 0 at level " + std::to_string(k) +
                                                    ", column " + std::to_string(col));
        }
    }
}

bool EGradedComplex::degrees_preserved() const {
    for (int k = 0; k + 1 < levels(); ++k) {
        const auto& src = gens[static_cast<std::size_t>(k)];
        const auto& dst = gens[static_cast<std::size_t>(k + 1)];
        const auto& d = diff[static_cast<std::size_t>(k)];
        for (std::size_t col = 0; col < d.size(); ++col)
            for (const auto& [row, c] : d[col]) {
                (void)c;
                if (src[col].q != dst[static_cast<std::size_t>(row)].q ||
                    src[col].tau != dst[static_cast<std::size_t>(row)].tau)
                    return false;
            }
    }
    return true;
}

ComplexSkeleton complex_skeleton(const ShiftedCube& cube) {
    int m = cube.crossings();
    std::uint32_t count = 1u << m;

    ComplexSkeleton s;
    s.min_degree = cube.min_degree();
    s.gens.assign(static_cast<std::size_t>(m + 1), {});
    s.vertex_base.assign(count, 0);

    auto [gq, gt] = cube.global_shift();
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        int k = std::popcount(bits);
        const CubeVertex& v = cube.vertices[bits];
        s.vertex_base[bits] = static_cast<int>(s.gens[static_cast<std::size_t>(k)].size());
        auto [sq, st] = cube.vertex_shift(bits);
        for (std::uint32_t labels = 0; labels < (1u << v.circles); ++labels) {
            int w = std::popcount(labels);
            ChainGenerator g;
            g.vertex = bits;
            g.labels = labels;
            g.q = (v.circles - 2 * w) + sq + gq;
            g.tau = CyclotomicInt4::mod4((2 * w - v.circles) + st + gt);
            s.gens[static_cast<std::size_t>(k)].push_back(g);
        }
    }
    return s;
}

EGradedComplex tqft_complex(const ShiftedCube& cube) {
    int m = cube.crossings();
    std::uint32_t count = 1u << m;
    int levels = m + 1;

    ComplexSkeleton skel = complex_skeleton(cube);
    EGradedComplex c;
    c.min_degree = skel.min_degree;
    c.gens = std::move(skel.gens);
    const std::vector<int>& base = skel.vertex_base;
    c.diff.assign(static_cast<std::size_t>(levels > 0 ? levels - 1 : 0), {});
    for (int k = 0; k + 1 < levels; ++k)
        c.diff[static_cast<std::size_t>(k)].assign(c.gens[static_cast<std::size_t>(k)].size(), {});

    for (std::uint32_t bits = 0; bits < count; ++bits) {
        int k = std::popcount(bits);
        const CubeVertex& src = cube.vertices[bits];
        for (const CubeEdge& e : cube.out_edges[bits]) {
            const CubeVertex& dst = cube.vertices[e.to];
            std::vector<int> target_of = circle_correspondence(cube, e);
            for (std::uint32_t labels = 0; labels < (1u << src.circles); ++labels) {
                int col = base[bits] + static_cast<int>(labels);
                auto& column = c.diff[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];

                std::uint32_t carried = 0;
                for (int s = 0; s < src.circles; ++s)
                    if (target_of[static_cast<std::size_t>(s)] >= 0)
                        carried = with_label(carried, target_of[static_cast<std::size_t>(s)],
                                             dst.circles, label_of(labels, s, src.circles));

                if (e.merge) {
                    int prod = FrobeniusSpec::multiply(label_of(labels, e.src_a, src.circles),
                                                       label_of(labels, e.src_b, src.circles));
                    if (prod < 0) continue;
                    std::uint32_t out = with_label(carried, e.tgt_c, dst.circles, prod);
                    column.emplace_back(base[e.to] + static_cast<int>(out), e.sign);
                } else {
                    for (auto [x, y] : FrobeniusSpec::comultiply(label_of(labels, e.src_a, src.circles))) {
                        std::uint32_t out = with_label(carried, e.tgt_c, dst.circles, x);
                        out = with_label(out, e.tgt_d, dst.circles, y);
                        column.emplace_back(base[e.to] + static_cast<int>(out), e.sign);
                    }
                }
            }
        }
    }
    for (auto& level : c.diff)
        for (auto& column : level) std::sort(column.begin(), column.end());

    c.check_d_squared();
    return c;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

namespace {

// Reduction engine: brings `a` to Smith form by elementary row/column
// operations, mirroring them into the optional accompanying matrices.
//   u_inv accumulates U = (row ops)^{-1}      (so a_orig = U * D * V)
//   q     accumulates the column ops          (kernel basis lives here)
//   q_inv accumulates their inverses = V
struct SnfEngine {
    IntMat a;
    IntMat* u_inv = nullptr;
    IntMat* q = nullptr;
    IntMat* q_inv = nullptr;

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(r1, c), a.at(r2, c));
        if (u_inv)
            for (int r = 0; r < u_inv->rows; ++r) std::swap(u_inv->at(r, r1), u_inv->at(r, r2));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
        if (q)
            for (int r = 0; r < q->rows; ++r) std::swap(q->at(r, c1), q->at(r, c2));
        if (q_inv)
            for (int c = 0; c < q_inv->cols; ++c) std::swap(q_inv->at(c1, c), q_inv->at(c2, c));
    }
    void negate_row(int r) {
        for (int c = 0; c < a.cols; ++c) a.at(r, c) = -a.at(r, c);
        if (u_inv)
            for (int i = 0; i < u_inv->rows; ++i) u_inv->at(i, r) = -u_inv->at(i, r);
    }
    // row r1 += f * row r2
    void add_row(int r1, const Int& f, int r2) {
        for (int c = 0; c < a.cols; ++c)
            if (a.at(r2, c) != 0) a.at(r1, c) += f * a.at(r2, c);
        // inverse op on U: column r2 -= f * column r1
        if (u_inv)
            for (int r = 0; r < u_inv->rows; ++r) u_inv->at(r, r2) -= f * u_inv->at(r, r1);
    }
    // col c1 += f * col c2
    void add_col(int c1, const Int& f, int c2) {
        for (int r = 0; r < a.rows; ++r)
            if (a.at(r, c2) != 0) a.at(r, c1) += f * a.at(r, c2);
        if (q)
            for (int r = 0; r < q->rows; ++r) q->at(r, c1) += f * q->at(r, c2);
        // inverse op on V = Q^{-1}: row c2 -= f * row c1
        if (q_inv)
            for (int c = 0; c < q_inv->cols; ++c) q_inv->at(c2, c) -= f * q_inv->at(c1, c);
    }

    void run() {
        int t = 0;
        int limit = std::min(a.rows, a.cols);
        while (t < limit) {
            // Smallest-magnitude pivot keeps the intermediate entries tame.
            int pr = -1, pc = -1;
            for (int r = t; r < a.rows; ++r)
                for (int c = t; c < a.cols; ++c) {
                    const Int& v = a.at(r, c);
                    if (v == 0) continue;
                    if (pr < 0 || cmp(abs(v), abs(a.at(pr, pc))) < 0) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            if (a.at(t, t) < 0) negate_row(t);

            bool clean = true;
            for (int r = t + 1; r < a.rows; ++r) {
                if (a.at(r, t) == 0) continue;
                Int f = -(a.at(r, t) / a.at(t, t));
                if (f != 0) add_row(r, f, t);
                if (a.at(r, t) != 0) clean = false;  // remainder left: retry with smaller pivot
            }
            for (int c = t + 1; c < a.cols; ++c) {
                if (a.at(t, c) == 0) continue;
                Int f = -(a.at(t, c) / a.at(t, t));
                if (f != 0) add_col(c, f, t);
                if (a.at(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: the pivot must divide every remaining entry.
            bool divides = true;
            for (int r = t + 1; r < a.rows && divides; ++r)
                for (int c = t + 1; c < a.cols; ++c)
                    if (a.at(r, c) % a.at(t, t) != 0) {
                        add_row(t, 1, r);
                        divides = false;
                        break;
                    }
            if (!divides) continue;
            ++t;
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    SnfEngine eng;
    eng.a = m;
    IntMat u = IntMat::identity(m.rows);
    IntMat v = IntMat::identity(m.cols);
    eng.u_inv = &u;
    eng.q_inv = &v;
    eng.run();
    return SmithResult{std::move(u), std::move(eng.a), std::move(v)};
}

namespace {

struct BlockKey {
    int q;
    int tau;
    bool operator<(const BlockKey& o) const { return q != o.q ? q < o.q : tau < o.tau; }
};

std::vector<Int> invariant_factors(const IntMat& m) {
    SnfEngine eng;
    eng.a = m;
    eng.run();
    std::vector<Int> d;
    for (int t = 0; t < std::min(m.rows, m.cols); ++t)
        if (eng.a.at(t, t) != 0) d.push_back(eng.a.at(t, t));
    return d;
}

}  // namespace

HomologyTable homology(const EGradedComplex& c) {
    HomologyTable table;
    for (int k = 0; k < c.levels(); ++k) {
        const auto& gens = c.gens[static_cast<std::size_t>(k)];
        // Partition this level's generators by (q, tau).
        std::map<BlockKey, std::vector<int>> blocks;
        for (int g = 0; g < static_cast<int>(gens.size()); ++g)
            blocks[{gens[static_cast<std::size_t>(g)].q, gens[static_cast<std::size_t>(g)].tau}].push_back(g);

        for (const auto& [key, cols] : blocks) {
            // Outgoing differential restricted to this block.
            std::map<int, int> out_row_index;
            IntMat b_mat(0, 0);
            if (k + 1 < c.levels()) {
                const auto& d = c.diff[static_cast<std::size_t>(k)];
                for (int col : cols)
                    for (const auto& [row, coeff] : d[static_cast<std::size_t>(col)]) {
                        (void)coeff;
                        out_row_index.emplace(row, 0);
                    }
                int nr = 0;
                for (auto& [row, idx] : out_row_index) idx = nr++;
                b_mat = IntMat(nr, static_cast<int>(cols.size()));
                for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                    for (const auto& [row, coeff] : d[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])])
                        b_mat.at(out_row_index[row], j) = coeff;
            } else {
                b_mat = IntMat(0, static_cast<int>(cols.size()));
            }

            // Kernel of the outgoing block.
            SnfEngine eng;
            eng.a = b_mat;
            IntMat qm = IntMat::identity(b_mat.cols);
            IntMat qinv = IntMat::identity(b_mat.cols);
            eng.q = &qm;
            eng.q_inv = &qinv;
            eng.run();
            int rank_b = 0;
            for (int t = 0; t < std::min(b_mat.rows, b_mat.cols); ++t)
                if (eng.a.at(t, t) != 0) ++rank_b;
            int kdim = b_mat.cols - rank_b;
            if (kdim == 0) continue;
            std::vector<int> kernel_idx;
            for (int j = 0; j < b_mat.cols; ++j)
                if (j >= std::min(b_mat.rows, b_mat.cols) || eng.a.at(j, j) == 0) kernel_idx.push_back(j);

            // Incoming differential expressed in the kernel basis.
            IntMat a_in(0, 0);
            if (k > 0) {
                const auto& d_in = c.diff[static_cast<std::size_t>(k - 1)];
                std::map<int, int> block_row;  // generator index -> block position
                for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                    block_row[cols[static_cast<std::size_t>(j)]] = j;
                std::vector<int> in_cols;
                for (int col = 0; col < static_cast<int>(d_in.size()); ++col)
                    for (const auto& [row, coeff] : d_in[static_cast<std::size_t>(col)]) {
                        (void)coeff;
                        if (block_row.count(row)) {
                            in_cols.push_back(col);
                            break;
                        }
                    }
                IntMat raw(static_cast<int>(cols.size()), static_cast<int>(in_cols.size()));
                for (int j = 0; j < static_cast<int>(in_cols.size()); ++j)
                    for (const auto& [row, coeff] : d_in[static_cast<std::size_t>(in_cols[static_cast<std::size_t>(j)])])
                        if (auto it = block_row.find(row); it != block_row.end())
                            raw.at(it->second, j) = coeff;
                // Coordinates w.r.t. the kernel basis: rows of Q^{-1} * raw at
                // kernel indices; all other rows must vanish since d^2 = 0.
                IntMat coords = qinv * raw;
                a_in = IntMat(kdim, raw.cols);
                for (int r = 0; r < b_mat.cols; ++r) {
                    auto kit = std::find(kernel_idx.begin(), kernel_idx.end(), r);
                    for (int j = 0; j < raw.cols; ++j) {
                        if (kit == kernel_idx.end()) {
                            if (coords.at(r, j) != 0)
                                throw DifferentialNotSquareZero("image not inside kernel");
                        } else {
                            a_in.at(static_cast<int>(kit - kernel_idx.begin()), j) = coords.at(r, j);
                        }
                    }
                }
            } else {
                a_in = IntMat(kdim, 0);
            }

            std::vector<Int> factors = invariant_factors(a_in);
            HomologyGroup group;
            group.rank = kdim - static_cast<int>(factors.size());
            for (const Int& f : factors)
                if (f > 1) group.torsion.push_back(f);
            if (!group.trivial()) table.rows[{c.degree_of_level(k), key.q, key.tau}] = group;
        }
    }
    return table;
}

TauLaurent graded_euler(const EGradedComplex& c) {
    TauLaurent chi;
    for (int k = 0; k < c.levels(); ++k) {
        int sign = (c.degree_of_level(k) % 2 == 0) ? 1 : -1;
        for (const ChainGenerator& g : c.gens[static_cast<std::size_t>(k)])
            chi += TauLaurent::monomial(g.tau, g.q, sign);
    }
    return chi;
}

namespace {

std::string torsion_json(const std::vector<Int>& torsion) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out << ",";
        out << torsion[i].get_str();
    }
    out << "]";
    return out.str();
}

// Merge invariant-factor lists of direct summands back into one divisibility
// chain via prime-power bookkeeping.
std::vector<Int> combine_invariant_factors(const std::vector<Int>& all) {
    std::map<Int, std::vector<int>> prime_exponents;  // prime -> exponents, one per factor
    for (const Int& f : all) {
        Int rest = f;
        for (Int p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            prime_exponents[p].push_back(e);
        }
        if (rest > 1) prime_exponents[rest].push_back(1);
    }
    std::size_t chain_len = 0;
    for (auto& [p, es] : prime_exponents) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> chain(chain_len, 1);
    for (const auto& [p, es] : prime_exponents)
        for (std::size_t i = 0; i < es.size(); ++i) {
            Int pe = 1;
            for (int e = 0; e < es[i]; ++e) pe *= p;
            chain[i] *= pe;  // i-th largest exponents multiply into the i-th last factor
        }
    std::sort(chain.begin(), chain.end());  // ascending divisibility chain
    return chain;
}

}  // namespace

std::string HomologyTable::to_json() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [key, group] : rows) {
        if (!first) out << ",";
        first = false;
        auto [i, q, tau] = key;
        out << "{\"i\":" << i << ",\"q\":" << q << ",\"tau\":" << tau << ",\"rank\":" << group.rank
            << ",\"torsion\":" << torsion_json(group.torsion) << "}";
    }
    out << "]";
    return out.str();
}

std::string HomologyTable::to_text() const {
    std::ostringstream out;
    out << "  i    q  tau  rank  torsion\n";
    for (const auto& [key, group] : rows) {
        auto [i, q, tau] = key;
        out << std::setw(3) << i << "  " << std::setw(3) << q << "  " << std::setw(3) << tau << "  "
            << std::setw(4) << group.rank << "  " << torsion_json(group.torsion) << "\n";
    }
    return out.str();
}

QTable forget_tau(const HomologyTable& t) {
    std::map<std::pair<int, int>, std::vector<Int>> torsions;
    QTable out;
    for (const auto& [key, group] : t.rows) {
        auto [i, q, tau] = key;
        (void)tau;
        out[{i, q}].rank += group.rank;
        auto& ts = torsions[{i, q}];
        ts.insert(ts.end(), group.torsion.begin(), group.torsion.end());
    }
    for (auto& [key, group] : out) {
        const auto& ts = torsions[key];
        if (ts.size() <= 1) group.torsion = ts;
        else group.torsion = combine_invariant_factors(ts);
    }
    return out;
}

std::string qtable_to_json(const QTable& t) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [key, group] : t) {
        if (!first) out << ",";
        first = false;
        out << "{\"i\":" << key.first << ",\"q\":" << key.second << ",\"rank\":" << group.rank
            << ",\"torsion\":" << torsion_json(group.torsion) << "}";
    }
    out << "]";
    return out.str();
}

std::string qtable_to_text(const QTable& t) {
    std::ostringstream out;
    out << "  i    q  rank  torsion\n";
    for (const auto& [key, group] : t)
        out << std::setw(3) << key.first << "  " << std::setw(3) << key.second << "  " << std::setw(4)
            << group.rank << "  " << torsion_json(group.torsion) << "\n";
    return out.str();
}

std::map<std::pair<int, int>, int> gf2_homology_dims(const EGradedComplex& c) {
    // Per level, per q-degree: dim ker - rank of the incoming block over F_2.
    std::map<std::pair<int, int>, int> dims;
    for (int k = 0; k < c.levels(); ++k) {
        std::map<int, std::vector<int>> blocks;  // q -> generator indices at level k
        const auto& gens = c.gens[static_cast<std::size_t>(k)];
        for (int g = 0; g < static_cast<int>(gens.size()); ++g)
            blocks[gens[static_cast<std::size_t>(g)].q].push_back(g);

        for (const auto& [q, cols] : blocks) {
            auto rank_of = [&c](int level, const std::vector<int>& source_cols,
                                const std::map<int, int>* restrict_rows) {
                if (level < 0 || level >= static_cast<int>(c.diff.size())) return 0;
                const auto& d = c.diff[static_cast<std::size_t>(level)];
                // Gather columns as sparse row lists mod 2.
                std::vector<std::vector<int>> sparse;
                for (int col : source_cols) {
                    std::vector<int> rows;
                    for (const auto& [row, coeff] : d[static_cast<std::size_t>(col)]) {
                        if (coeff % 2 == 0) continue;
                        if (restrict_rows && !restrict_rows->count(row)) continue;
                        rows.push_back(row);
                    }
                    if (!rows.empty()) sparse.push_back(std::move(rows));
                }
                // Dense elimination over packed words.
                std::map<int, int> row_index;
                for (const auto& rows : sparse)
                    for (int r : rows) row_index.emplace(r, 0);
                int nr = 0;
                for (auto& [r, idx] : row_index) idx = nr++;
                std::size_t words = static_cast<std::size_t>((nr + 63) / 64);
                std::vector<std::vector<std::uint64_t>> mat;
                for (const auto& rows : sparse) {
                    std::vector<std::uint64_t> v(words, 0);
                    for (int r : rows) {
                        int idx = row_index[r];
                        v[static_cast<std::size_t>(idx / 64)] ^= (1ULL << (idx % 64));
                    }
                    mat.push_back(std::move(v));
                }
                int rank = 0;
                std::vector<int> pivot_word;
                std::vector<std::vector<std::uint64_t>> basis;
                for (auto& v : mat) {
                    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                        int pw = pivot_word[bi];
                        if ((v[static_cast<std::size_t>(pw / 64)] >> (pw % 64)) & 1ULL) {
                            for (std::size_t w = 0; w < words; ++w) v[w] ^= basis[bi][w];
                        }
                    }
                    int pivot = -1;
                    for (int r = 0; r < nr && pivot < 0; ++r)
                        if ((v[static_cast<std::size_t>(r / 64)] >> (r % 64)) & 1ULL) pivot = r;
                    if (pivot >= 0) {
                        basis.push_back(v);
                        pivot_word.push_back(pivot);
                        ++rank;
                    }
                }
                return rank;
            };

            // Outgoing rank from this block (rows unrestricted: degree
            // preservation confines them to matching q).
            int rank_out = rank_of(k, cols, nullptr);
            // Incoming rank: columns at level k-1 with q-degree q, rows inside this block.
            int rank_in = 0;
            if (k > 0) {
                std::vector<int> in_cols;
                const auto& prev = c.gens[static_cast<std::size_t>(k - 1)];
                for (int g = 0; g < static_cast<int>(prev.size()); ++g)
                    if (prev[static_cast<std::size_t>(g)].q == q) in_cols.push_back(g);
                std::map<int, int> rows;
                for (int col : cols) rows.emplace(col, 0);
                rank_in = rank_of(k - 1, in_cols, &rows);
            }
            int dim = static_cast<int>(cols.size()) - rank_out - rank_in;
            if (dim != 0) dims[{c.degree_of_level(k), q}] = dim;
        }
    }
    return dims;
}

}  // namespace ebraid
