#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ebraid/cube.hpp"
#include "ebraid/homology.hpp"
#include "ebraid/scalar.hpp"

namespace ebraid {

/// Degree in G = Z x Z_4 x Z_2. The commutation cocycle is
/// lambda((a,b,c),(d,e,f)) = pi^{cf}: only the parity components interact.
struct GDegree {
    int q = 0;
    int tau = 0;     // Z_4
    int parity = 0;  // Z_2

    GDegree operator+(const GDegree& o) const {
        return GDegree{q + o.q, CyclotomicInt4::mod4(tau + o.tau), (parity + o.parity) & 1};
    }
    bool operator==(const GDegree& o) const {
        return q == o.q && tau == o.tau && parity == o.parity;
    }
};

/// The covering Frobenius algebra over Z^pi: deg(1) = (1,-1,0),
/// deg(X) = (-1,1,1); m as in the even theory, Delta(1) = pi 1(x)X + X(x)1,
/// Delta(X) = X(x)X. Map degrees: Delta (-1,1,1), m (-1,1,0), eps (1,-1,1),
/// eta (1,-1,0).
struct CovFrobeniusSpec {
    static GDegree unit_degree() { return GDegree{1, 3, 0}; }
    static GDegree x_degree() { return GDegree{-1, 1, 1}; }
    static GDegree m_degree() { return GDegree{-1, 1, 0}; }
    static GDegree delta_degree() { return GDegree{-1, 1, 1}; }
    static GDegree counit_degree() { return GDegree{1, 3, 1}; }
    static GDegree eta_degree() { return GDegree{1, 3, 0}; }

    static int multiply(int a, int b) { return (a && b) ? -1 : (a | b); }
    /// (first label, second label, coefficient)
    struct DeltaBranch {
        int first;
        int second;
        PiScalar coeff;
    };
    static std::vector<DeltaBranch> comultiply(int a) {
        if (a) return {{1, 1, PiScalar(1)}};
        return {{0, 1, PiScalar::pi()}, {1, 0, PiScalar(1)}};
    }
    static PiScalar counit(int a) { return a ? PiScalar(1) : PiScalar(0); }

    /// At pi = 1 every table coincides with the even FrobeniusSpec.
    static bool specializes_to_even();
};

/// Chain complex of free Z^pi-modules over the shared generator skeleton.
/// A generator's parity is the number of X labels mod 2.
struct PiComplex {
    int min_degree = 0;
    std::vector<std::vector<ChainGenerator>> gens;
    std::vector<std::vector<std::vector<std::pair<int, PiScalar>>>> diff;

    int levels() const { return static_cast<int>(gens.size()); }
    int degree_of_level(int k) const { return min_degree + k; }

    void check_d_squared() const;  // over Z^pi; throws DifferentialNotSquareZero
    bool degrees_preserved() const;
    std::string to_json() const;  // entries {"a":int,"b":int} meaning a + b*pi
};

/// Unsigned covering block of one saddle: for each source label word, the
/// (target label word, Z^pi coefficient) entries produced by the lambda-graded
/// tensor calculus (transport of the odd Delta past the prefix, swap
/// coefficients pi^{c_x c_y} for the reordering between canonical orders).
std::vector<std::vector<std::pair<std::uint32_t, PiScalar>>> cov_edge_columns(const ShiftedCube& cube,
                                                                              const CubeEdge& edge);

/// Units in {+-1, +-pi}, one per edge, aligned with cube.out_edges.
struct CovSigns {
    std::vector<std::vector<PiScalar>> unit;
};

/// Compute all face commutation defects (each a unit in {1, pi}), solve for
/// edge units making every face anticommute over Z^pi, and verify the whole
/// cube. Throws SignSystemInconsistent if a face defect is not a {1, pi}
/// proportionality or verification fails. At pi = 1 the units reduce to the
/// even lexicographic signs.
CovSigns cov_sign_assignment(const ShiftedCube& cube);

/// Assembled covering complex (edge maps times solved units); d^2 = 0 over Z^pi.
PiComplex build_cov_complex(const ShiftedCube& cube);
PiComplex build_cov_complex(const BraidWord& b);

/// Ring map pi -> s (s = +1 or -1) applied entrywise; the result is an
/// integer complex with d^2 = 0.
EGradedComplex specialize_pi(const PiComplex& c, int s);

}  // namespace ebraid
