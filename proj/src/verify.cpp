#include "ebraid/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "ebraid/covering.hpp"
#include "ebraid/homology.hpp"
#include "ebraid/rep.hpp"
#include "ebraid/skein.hpp"

namespace ebraid {

namespace {

// Signed even edge block: plain Frobenius tables with the lexicographic sign.
std::vector<std::vector<std::pair<std::uint32_t, int>>> even_edge_block(const ShiftedCube& cube,
                                                                        const CubeEdge& e) {
    const CubeVertex& src = cube.vertices[e.from];
    const CubeVertex& dst = cube.vertices[e.to];
    std::vector<int> target_of = circle_correspondence(cube, e);
    std::vector<std::vector<std::pair<std::uint32_t, int>>> cols(static_cast<std::size_t>(1u)
                                                                 << src.circles);
    auto label_of = [](std::uint32_t labels, int circle, int circles) {
        return static_cast<int>((labels >> (circles - 1 - circle)) & 1u);
    };
    auto with_label = [](std::uint32_t labels, int circle, int circles, int value) {
        std::uint32_t bit = 1u << (circles - 1 - circle);
        return value ? (labels | bit) : (labels & ~bit);
    };
    for (std::uint32_t L = 0; L < (1u << src.circles); ++L) {
        std::uint32_t carried = 0;
        for (int s = 0; s < src.circles; ++s)
            if (target_of[static_cast<std::size_t>(s)] >= 0)
                carried = with_label(carried, target_of[static_cast<std::size_t>(s)], dst.circles,
                                     label_of(L, s, src.circles));
        if (e.merge) {
            int prod = FrobeniusSpec::multiply(label_of(L, e.src_a, src.circles),
                                               label_of(L, e.src_b, src.circles));
            if (prod < 0) continue;
            cols[L].emplace_back(with_label(carried, e.tgt_c, dst.circles, prod), e.sign);
        } else {
            for (auto [x, y] : FrobeniusSpec::comultiply(label_of(L, e.src_a, src.circles))) {
                std::uint32_t out = with_label(carried, e.tgt_c, dst.circles, x);
                out = with_label(out, e.tgt_d, dst.circles, y);
                cols[L].emplace_back(out, e.sign);
            }
        }
    }
    return cols;
}

/// For every 2-face the two signed path composites sum to zero.
bool faces_anticommute(const ShiftedCube& cube) {
    int m = cube.crossings();
    std::uint32_t count = 1u << m;
    auto edge_at = [&cube](std::uint32_t state, int crossing) -> const CubeEdge& {
        for (const CubeEdge& e : cube.out_edges[state])
            if (e.crossing == crossing) return e;
        throw std::logic_error("missing edge");
    };
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        for (int i = 0; i < m; ++i) {
            if ((bits >> i) & 1u) continue;
            for (int j = i + 1; j < m; ++j) {
                if ((bits >> j) & 1u) continue;
                auto b1 = even_edge_block(cube, edge_at(bits, i));
                auto b2 = even_edge_block(cube, edge_at(bits | (1u << i), j));
                auto b3 = even_edge_block(cube, edge_at(bits, j));
                auto b4 = even_edge_block(cube, edge_at(bits | (1u << j), i));
                for (std::uint32_t col = 0; col < b1.size(); ++col) {
                    std::map<std::uint32_t, int> acc;
                    for (const auto& [mid, c1] : b1[col])
                        for (const auto& [row, c2] : b2[mid]) acc[row] += c1 * c2;
                    for (const auto& [mid, c1] : b3[col])
                        for (const auto& [row, c2] : b4[mid]) acc[row] += c1 * c2;
                    for (const auto& [row, v] : acc) {
                        (void)row;
                        if (v != 0) return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

VerifyReport verify_markov(const VerifyOptions& opts) {
    VerifyReport report;
    SplitMix64 rng(opts.seed);
    for (int t = 0; t < opts.trials; ++t) {
        int strands = rng.range(2, opts.max_strands);
        int len = rng.range(0, opts.max_crossings);
        BraidWord b = random_braid(strands, len, rng.next());
        TauLaurent reference = jhat(b);
        for (const BraidWord& v : markov_variants(b, rng.next(), 5)) {
            ++report.checks;
            if (jhat(v) != reference)
                report.fail("jhat differs for variant '" + render(v) + "' of '" + render(b) + "'");
        }
    }
    return report;
}

VerifyReport verify_euler(const VerifyOptions& opts, const std::vector<CorpusEntry>& corpus) {
    VerifyReport report;
    auto run_one = [&report](const BraidWord& b, const std::string& name) {
        ++report.checks;
        try {
            ShiftedCube cube = build_cube(b);
            if (!degree_audit(cube)) {
                report.fail(name + ": degree audit failed");
                return;
            }
            EGradedComplex c = tqft_complex(cube);  // checks d^2 = 0
            if (!c.degrees_preserved()) {
                report.fail(name + ": differential not degree-preserving");
                return;
            }
            if (!faces_anticommute(cube)) {
                report.fail(name + ": a face fails to anticommute");
                return;
            }
            if (graded_euler(c) != jhat(b)) {
                report.fail(name + ": graded Euler characteristic != jhat");
                return;
            }
        } catch (const std::exception& e) {
            report.fail(name + ": " + e.what());
        }
    };

    for (const CorpusEntry& e : corpus) run_one(e.braid(), e.name);
    SplitMix64 rng(opts.seed);
    for (int t = 0; t < opts.trials; ++t) {
        int strands = rng.range(2, opts.max_strands);
        int len = rng.range(0, opts.max_crossings);
        BraidWord b = random_braid(strands, len, rng.next());
        run_one(b, "random '" + render(b) + "'");
    }
    return report;
}

VerifyReport verify_oracle(const VerifyOptions& opts) {
    VerifyReport report;
    auto check = [&report](const BraidWord& b) {
        ++report.checks;
        TauLaurent via_states = bracket(b);
        TauLaurent via_tl = bracket_via_tl(b);
        TauLaurent via_tensors = evaluate_closed_braid(b);
        if (via_states != via_tl || via_states != via_tensors)
            report.fail("methods disagree on '" + render(b) + "' (strands " +
                        std::to_string(b.strands) + ")");
    };

    // Exhaustive sweep over all words up to 4 crossings.
    int exhaustive_len = std::min(4, opts.max_crossings);
    for (int strands = 1; strands <= opts.max_strands; ++strands) {
        int alphabet = 2 * (strands - 1);
        std::vector<int> letters;
        for (int i = 1; i < strands; ++i) {
            letters.push_back(i);
            letters.push_back(-i);
        }
        check(BraidWord(strands, {}));
        if (alphabet == 0) continue;
        for (int len = 1; len <= exhaustive_len; ++len) {
            std::vector<int> idx(static_cast<std::size_t>(len), 0);
            while (true) {
                std::vector<int> word;
                for (int p = 0; p < len; ++p)
                    word.push_back(letters[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])]);
                check(BraidWord(strands, std::move(word)));
                int p = len - 1;
                while (p >= 0 && idx[static_cast<std::size_t>(p)] == alphabet - 1) {
                    idx[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
                ++idx[static_cast<std::size_t>(p)];
            }
        }
    }

    // Random words above the exhaustive range.
    if (opts.max_crossings > exhaustive_len) {
        SplitMix64 rng(opts.seed);
        for (int t = 0; t < opts.trials; ++t) {
            int strands = rng.range(2, opts.max_strands);
            int len = rng.range(exhaustive_len + 1, opts.max_crossings);
            check(random_braid(strands, len, rng.next()));
        }
    }
    return report;
}

VerifyReport verify_signs(const VerifyOptions& opts, const std::vector<CorpusEntry>& corpus) {
    VerifyReport report;
    auto run_one = [&report](const BraidWord& b, const std::string& name) {
        ++report.checks;
        try {
            ShiftedCube cube = build_cube(b);
            PiComplex cov = build_cov_complex(cube);  // sign solve + face verify + d^2
            if (!cov.degrees_preserved()) {
                report.fail(name + ": covering differential not degree-preserving");
                return;
            }
            EGradedComplex even = tqft_complex(cube);
            if (!(specialize_pi(cov, 1) == even)) {
                report.fail(name + ": pi=1 specialization differs from the even complex");
                return;
            }
            EGradedComplex odd = specialize_pi(cov, -1);
            if (gf2_homology_dims(odd) != gf2_homology_dims(even)) {
                report.fail(name + ": mod-2 homology dimensions differ between pi=+-1");
                return;
            }
        } catch (const std::exception& e) {
            report.fail(name + ": " + e.what());
        }
    };

    for (const CorpusEntry& e : corpus) run_one(e.braid(), e.name);
    SplitMix64 rng(opts.seed);
    for (int t = 0; t < opts.trials; ++t) {
        int strands = rng.range(2, opts.max_strands);
        int len = rng.range(0, opts.max_crossings);
        run_one(random_braid(strands, len, rng.next()), "random");
    }
    return report;
}

}  // namespace ebraid
