#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "ebraid/corpus.hpp"
#include "ebraid/covering.hpp"
#include "ebraid/skein.hpp"

using namespace ebraid;

TEST_CASE("covering Frobenius tables specialize to the even ones at pi=1") {
    CHECK(CovFrobeniusSpec::specializes_to_even());
    CHECK(CovFrobeniusSpec::delta_degree().parity == 1);
    CHECK(CovFrobeniusSpec::m_degree().parity == 0);
    CHECK(CovFrobeniusSpec::counit_degree().parity == 1);
    CHECK(CovFrobeniusSpec::eta_degree().parity == 0);
    // Delta(1) carries the pi coefficient on the 1 (x) X branch.
    bool saw_pi = false;
    for (const auto& br : CovFrobeniusSpec::comultiply(0))
        if (br.first == 0 && br.second == 1) saw_pi = (br.coeff == PiScalar::pi());
    CHECK(saw_pi);
}

TEST_CASE("split at the first circle is the plain Delta table") {
    // sigma_1 sigma_1 in B_2: state 10 has one circle splitting into two.
    ShiftedCube cube = build_cube(parse_braid("1 1", 2));
    const CubeEdge* split = nullptr;
    for (const CubeEdge& e : cube.out_edges[0b01])
        if (!e.merge) split = &e;
    REQUIRE(split != nullptr);
    auto cols = cov_edge_columns(cube, *split);
    REQUIRE(cols.size() == 2);  // one source circle
    // source 1 (labels 0): pi on the (unit, X) branch, 1 on (X, unit)
    bool has_pi_branch = false, has_plain_branch = false;
    for (const auto& [word, coeff] : cols[0]) {
        if (coeff == PiScalar::pi()) has_pi_branch = true;
        if (coeff == PiScalar(1)) has_plain_branch = true;
    }
    CHECK(has_pi_branch);
    CHECK(has_plain_branch);
    // source X: single branch (X, X) with coefficient 1
    REQUIRE(cols[1].size() == 1);
    CHECK(cols[1][0].second == PiScalar(1));
}

TEST_CASE("merge with no reordering has coefficients in {0, 1}") {
    ShiftedCube cube = build_cube(parse_braid("1", 2));
    const CubeEdge& e = cube.out_edges[0][0];
    REQUIRE(e.merge);
    auto cols = cov_edge_columns(cube, e);
    REQUIRE(cols.size() == 4);
    CHECK(cols[0].size() == 1);   // unit (x) unit -> unit
    CHECK(cols[3].empty());       // X (x) X -> 0
    for (const auto& col : cols)
        for (const auto& [word, coeff] : col) CHECK(coeff == PiScalar(1));
}

TEST_CASE("covering sign assignment validates every face on the corpus") {
    for (const CorpusEntry& e : builtin_corpus()) {
        ShiftedCube cube = build_cube(e.braid());
        CHECK_NOTHROW(cov_sign_assignment(cube));
    }
}

TEST_CASE("defect-free cubes reproduce the lexicographic rule exactly") {
    // The Hopf cube's single face commutes on the nose over Z^pi, so the
    // solved pi-exponents all vanish and the units are the even signs.
    ShiftedCube cube = build_cube(parse_braid("1 1", 2));
    CovSigns signs = cov_sign_assignment(cube);
    for (std::uint32_t bits = 0; bits < 4; ++bits)
        for (std::size_t k = 0; k < cube.out_edges[bits].size(); ++k)
            CHECK(signs.unit[bits][k] == PiScalar(cube.out_edges[bits][k].sign));
}

TEST_CASE("build_cov_complex: d^2 = 0 over Z^pi and degrees preserved") {
    SplitMix64 rng(61);
    for (int t = 0; t < 15; ++t) {
        BraidWord b = random_braid(rng.range(2, 4), rng.range(0, 7), rng.next());
        PiComplex c = build_cov_complex(b);  // throws on any failure
        CHECK(c.degrees_preserved());
    }
}

TEST_CASE("pi = +1 specialization is matrix-identical to the even complex") {
    for (const CorpusEntry& e : builtin_corpus()) {
        ShiftedCube cube = build_cube(e.braid());
        CHECK(specialize_pi(build_cov_complex(cube), 1) == tqft_complex(cube));
    }
    SplitMix64 rng(62);
    for (int t = 0; t < 10; ++t) {
        BraidWord b = random_braid(rng.range(2, 4), rng.range(0, 7), rng.next());
        ShiftedCube cube = build_cube(b);
        CHECK(specialize_pi(build_cov_complex(cube), 1) == tqft_complex(cube));
    }
}

TEST_CASE("trefoil covering differentials contain pi entries before specialization") {
    PiComplex c = build_cov_complex(parse_braid("1 1 1", 2));
    bool saw_pi_entry = false;
    for (const auto& level : c.diff)
        for (const auto& column : level)
            for (const auto& [row, v] : column)
                if (v.b != 0) saw_pi_entry = true;
    CHECK(saw_pi_entry);
}

TEST_CASE("unknot covering complex is pi-free and identical under both specializations") {
    PiComplex c = build_cov_complex(parse_braid("", 1));
    CHECK(specialize_pi(c, 1) == specialize_pi(c, -1));
    // Also for the one-crossing unknot (a merge-only cube).
    PiComplex c1 = build_cov_complex(parse_braid("1", 2));
    CHECK(specialize_pi(c1, 1) == specialize_pi(c1, -1));
}

TEST_CASE("odd trefoil homology is torsion-free with the expected degrees") {
    EGradedComplex odd = specialize_pi(build_cov_complex(parse_braid("1 1 1", 2)), -1);
    HomologyTable h = homology(odd);
    HomologyTable want;
    auto free1 = [] {
        HomologyGroup g;
        g.rank = 1;
        return g;
    };
    want.rows[{0, 1, 3}] = free1();
    want.rows[{0, 3, 1}] = free1();
    want.rows[{2, 5, 3}] = free1();
    want.rows[{2, 7, 1}] = free1();
    want.rows[{3, 7, 1}] = free1();
    want.rows[{3, 9, 3}] = free1();
    CHECK(h == want);
}

TEST_CASE("mod-2 dimensions agree between pi = +1 and pi = -1") {
    for (const CorpusEntry& e : builtin_corpus()) {
        PiComplex cov = build_cov_complex(e.braid());
        CHECK(gf2_homology_dims(specialize_pi(cov, 1)) == gf2_homology_dims(specialize_pi(cov, -1)));
    }
}

TEST_CASE("Markov invariance of the pi = -1 homology on corpus braids") {
    SplitMix64 rng(63);
    for (const CorpusEntry& e : builtin_corpus()) {
        BraidWord b = e.braid();
        if (b.crossings() > 5) continue;
        HomologyTable base = homology(specialize_pi(build_cov_complex(b), -1));
        for (const BraidWord& v : markov_variants(b, rng.next(), 2)) {
            if (v.crossings() > 9) continue;
            CHECK(homology(specialize_pi(build_cov_complex(v), -1)) == base);
        }
    }
}

TEST_CASE("generic complex JSON dump carries a+b*pi entries") {
    PiComplex c = build_cov_complex(parse_braid("1 1", 2));
    std::string json = c.to_json();
    CHECK(json.find("\"a\":") != std::string::npos);
    CHECK(json.find("\"b\":") != std::string::npos);
    CHECK(json.find("\"parity\":") != std::string::npos);
}
