#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ebraid/cube.hpp"
#include "ebraid/scalar.hpp"

namespace ebraid {

/// The rank-2 Frobenius algebra A = R[X]/(X^2) with basis {1, X} in degrees
/// deg(1) = (1,-1), deg(X) = (-1,1). Labels: 0 = unit, 1 = X.
struct FrobeniusSpec {
    static constexpr int unit_q = 1, unit_tau = -1;
    static constexpr int x_q = -1, x_tau = 1;

    /// m(a (x) b): -1 encodes zero (X (x) X).
    static int multiply(int a, int b) { return (a && b) ? -1 : (a | b); }
    /// Delta branches: unit -> unit(x)X + X(x)unit, X -> X(x)X.
    static std::vector<std::pair<int, int>> comultiply(int a) {
        if (a) return {{1, 1}};
        return {{0, 1}, {1, 0}};
    }
    static int counit(int a) { return a ? 1 : 0; }  // eps(1)=0, eps(X)=1
    static int unit() { return 0; }                 // eta(1) = 1

    /// Finite-table check of the Frobenius axioms.
    static bool axioms_hold();
};

/// A free generator of a chain group: a basis word over {unit, X} on the
/// circles of one cube vertex, tagged with its total (q, tau) degree.
/// Labels are read lexicographically: circle c carries X iff bit
/// (circles-1-c) of `labels` is set.
struct ChainGenerator {
    std::uint32_t vertex = 0;
    std::uint32_t labels = 0;
    int q = 0;
    int tau = 0;  // in Z_4

    bool operator==(const ChainGenerator& o) const {
        return vertex == o.vertex && labels == o.labels && q == o.q && tau == o.tau;
    }
};

/// Sparse integer matrix stored per column: diff[col] = list of (row, coeff).
using SparseIntColumns = std::vector<std::vector<std::pair<int, int>>>;

/// Cohomologically indexed complex of free Z-modules with (q, Z_4) tags and
/// degree-preserving integer differentials.
class EGradedComplex {
  public:
    int min_degree = 0;
    std::vector<std::vector<ChainGenerator>> gens;  // gens[k] at index min_degree + k
    std::vector<SparseIntColumns> diff;             // diff[k]: gens[k] -> gens[k+1]

    int levels() const { return static_cast<int>(gens.size()); }
    int degree_of_level(int k) const { return min_degree + k; }

    /// Exact checks; throw DifferentialNotSquareZero / return false on defect.
    void check_d_squared() const;
    bool degrees_preserved() const;

    bool operator==(const EGradedComplex& o) const {
        return min_degree == o.min_degree && gens == o.gens && diff == o.diff;
    }
};

/// Shared generator layout of the even and covering complexes: vertices in
/// ascending state order within each cohomological level, label words in
/// lexicographic order inside each vertex.
struct ComplexSkeleton {
    int min_degree = 0;
    std::vector<std::vector<ChainGenerator>> gens;
    std::vector<int> vertex_base;  // per state: offset of its first generator in its level
};

ComplexSkeleton complex_skeleton(const ShiftedCube& cube);

/// Apply the e-graded TQFT to a signed cube: circles become tensor factors of
/// A, merges the multiplication, splits the comultiplication; generator
/// degrees include the vertex and global shifts. Verifies d^2 = 0.
EGradedComplex tqft_complex(const ShiftedCube& cube);

/// Dense arbitrary-precision integer matrix (row-major).
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}
    static IntMat identity(int n);

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    friend IntMat operator*(const IntMat& x, const IntMat& y);
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct SmithResult {
    IntMat u;  // unimodular
    IntMat d;  // diagonal, nonnegative, divisibility chain
    IntMat v;  // unimodular
};

/// M = U * D * V with D diagonal and d_1 | d_2 | ... .
SmithResult smith_normal_form(const IntMat& m);

struct HomologyGroup {
    int rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool trivial() const { return rank == 0 && torsion.empty(); }
};

/// (i, q, tau) -> group; zero groups are not stored.
struct HomologyTable {
    std::map<std::tuple<int, int, int>, HomologyGroup> rows;

    bool operator==(const HomologyTable& o) const { return rows == o.rows; }
    std::string to_json() const;
    std::string to_text() const;
};

/// Integral homology of the complex, computed blockwise per (q, tau) degree
/// (differentials preserve degree, so the complex splits).
HomologyTable homology(const EGradedComplex& c);

/// Alternating sum of graded ranks of the chain groups.
TauLaurent graded_euler(const EGradedComplex& c);

/// (i, q) -> group after collapsing the Z_4 index (direct-sum aggregation).
using QTable = std::map<std::pair<int, int>, HomologyGroup>;
QTable forget_tau(const HomologyTable& t);
std::string qtable_to_json(const QTable& t);
std::string qtable_to_text(const QTable& t);

/// F_2 dimensions of homology per (i, q), tau forgotten.
std::map<std::pair<int, int>, int> gf2_homology_dims(const EGradedComplex& c);

}  // namespace ebraid
