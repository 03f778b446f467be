#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "ebraid/cube.hpp"

using namespace ebraid;

TEST_CASE("trefoil cube vertex circle counts") {
    ShiftedCube cube = build_cube(parse_braid("1 1 1", 2));
    int want[8] = {2, 1, 1, 2, 1, 2, 2, 3};  // indexed by state bits
    for (std::uint32_t bits = 0; bits < 8; ++bits) CHECK(cube.vertices[bits].circles == want[bits]);
    CHECK(cube.n_pos == 3);
    CHECK(cube.n_neg == 0);
}

TEST_CASE("single positive crossing cube: the edge is a merge") {
    ShiftedCube cube = build_cube(parse_braid("1", 2));
    REQUIRE(cube.out_edges[0].size() == 1);
    const CubeEdge& e = cube.out_edges[0][0];
    CHECK(e.merge);
    CHECK(cube.vertices[0].circles == 2);
    CHECK(cube.vertices[1].circles == 1);
}

TEST_CASE("every edge changes the circle count by exactly one") {
    SplitMix64 rng(31);
    for (int t = 0; t < 40; ++t) {
        BraidWord b = random_braid(rng.range(2, 4), rng.range(0, 8), rng.next());
        ShiftedCube cube = build_cube(b);
        for (const auto& edges : cube.out_edges)
            for (const CubeEdge& e : edges) {
                int diff = cube.vertices[e.to].circles - cube.vertices[e.from].circles;
                CHECK(std::abs(diff) == 1);
                CHECK(e.merge == (diff == -1));
            }
    }
}

TEST_CASE("circle counts agree with the skein module") {
    SplitMix64 rng(32);
    for (int t = 0; t < 30; ++t) {
        BraidWord b = random_braid(rng.range(2, 4), rng.range(0, 7), rng.next());
        ShiftedCube cube = build_cube(b);
        for (std::uint32_t bits = 0; bits < (1u << b.crossings()); ++bits)
            CHECK(cube.vertices[bits].circles == resolve_state(b, State(bits, b.crossings())).circles);
    }
}

TEST_CASE("lexicographic sign rule") {
    ShiftedCube cube = build_cube(parse_braid("1 1", 2));
    auto sign_of = [&cube](std::uint32_t from, int crossing) {
        for (const CubeEdge& e : cube.out_edges[from])
            if (e.crossing == crossing) return e.sign;
        FAIL("edge not found");
        return 0;
    };
    CHECK(sign_of(0b00, 0) == 1);
    CHECK(sign_of(0b00, 1) == 1);
    CHECK(sign_of(0b10, 0) == 1);   // flipping crossing 0: the set bit sits above it
    CHECK(sign_of(0b01, 1) == -1);  // flipping crossing 1: one set bit below it
}

TEST_CASE("every face has edge-sign product -1") {
    SplitMix64 rng(33);
    for (int t = 0; t < 25; ++t) {
        BraidWord b = random_braid(rng.range(2, 4), rng.range(2, 7), rng.next());
        ShiftedCube cube = build_cube(b);
        int m = b.crossings();
        auto sign_of = [&cube](std::uint32_t from, int crossing) {
            for (const CubeEdge& e : cube.out_edges[from])
                if (e.crossing == crossing) return e.sign;
            return 0;
        };
        for (std::uint32_t bits = 0; bits < (1u << m); ++bits)
            for (int i = 0; i < m; ++i) {
                if ((bits >> i) & 1u) continue;
                for (int j = i + 1; j < m; ++j) {
                    if ((bits >> j) & 1u) continue;
                    int prod = sign_of(bits, i) * sign_of(bits | (1u << i), j) * sign_of(bits, j) *
                               sign_of(bits | (1u << j), i);
                    CHECK(prod == -1);
                }
            }
    }
}

TEST_CASE("homological degrees and shifts") {
    ShiftedCube cube = build_cube(parse_braid("1 -1 -1", 2));  // n+ = 1, n- = 2
    CHECK(cube.min_degree() == -2);
    CHECK(cube.max_degree() == 1);
    CHECK(cube.hom_degree(0b000) == -2);
    CHECK(cube.hom_degree(0b111) == 1);
    CHECK(cube.vertex_shift(0b000) == std::pair<int, int>{-2, 1});
    CHECK(cube.vertex_shift(0b011) == std::pair<int, int>{0, -1});
    CHECK(cube.global_shift() == std::pair<int, int>{-1, -2});
    CHECK(degree_audit(cube));
}

TEST_CASE("degree audit on random cubes") {
    SplitMix64 rng(34);
    for (int t = 0; t < 20; ++t)
        CHECK(degree_audit(build_cube(random_braid(rng.range(2, 4), rng.range(0, 7), rng.next()))));
}

TEST_CASE("circle correspondence is a bijection away from the saddle") {
    SplitMix64 rng(35);
    for (int t = 0; t < 20; ++t) {
        BraidWord b = random_braid(rng.range(2, 4), rng.range(1, 7), rng.next());
        ShiftedCube cube = build_cube(b);
        for (const auto& edges : cube.out_edges)
            for (const CubeEdge& e : edges) {
                std::vector<int> target_of = circle_correspondence(cube, e);
                std::vector<char> hit(static_cast<std::size_t>(cube.vertices[e.to].circles), 0);
                hit[static_cast<std::size_t>(e.tgt_c)] = 1;
                if (!e.merge) hit[static_cast<std::size_t>(e.tgt_d)] = 1;
                int involved = 0;
                for (int s = 0; s < cube.vertices[e.from].circles; ++s) {
                    if (target_of[static_cast<std::size_t>(s)] < 0) {
                        ++involved;
                        continue;
                    }
                    CHECK(!hit[static_cast<std::size_t>(target_of[static_cast<std::size_t>(s)])]);
                    hit[static_cast<std::size_t>(target_of[static_cast<std::size_t>(s)])] = 1;
                }
                CHECK(involved == (e.merge ? 2 : 1));
                for (char h : hit) CHECK(h == 1);
            }
    }
}

TEST_CASE("cube JSON dump shape") {
    std::string json = cube_to_json(build_cube(parse_braid("1", 2)));
    CHECK(json.find("\"vertices\":[{\"state\":0,\"circles\":2},{\"state\":1,\"circles\":1}]") !=
          std::string::npos);
    CHECK(json.find("\"kind\":\"merge\"") != std::string::npos);
}

TEST_CASE("cube crossing cap") {
    BraidWord big(2, std::vector<int>(kMaxCubeCrossings + 1, 1));
    CHECK_THROWS_AS(build_cube(big), TooManyCrossings);
}
