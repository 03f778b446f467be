#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ebraid/skein.hpp"
#include "ebraid/tl.hpp"

using namespace ebraid;

namespace {

TLElement random_tl(SplitMix64& rng, int n) {
    // Random word in the generators with random monomial coefficients.
    TLElement x = TLElement::unit(n);
    int factors = rng.range(0, 4);
    for (int f = 0; f < factors; ++f) {
        TLElement g(n);
        g.add_term(PlanarMatching::generator(n, rng.range(1, n - 1)),
                   TauLaurent::monomial(rng.range(0, 3), rng.range(-2, 2), rng.range(-3, 3)));
        if (rng.below(2)) g.add_term(PlanarMatching::identity(n), TauLaurent::monomial(0, 0, 1));
        x = x * g;
    }
    return x;
}

}  // namespace

TEST_CASE("generators and validation") {
    PlanarMatching e1 = PlanarMatching::generator(2, 1);
    CHECK(e1.partner(0) == 1);
    CHECK(e1.partner(2) == 3);
    PlanarMatching e2 = PlanarMatching::generator(3, 2);
    CHECK(e2.partner(0) == 3);  // strand 1 straight through
    CHECK(e2.partner(1) == 2);
    CHECK(e2.partner(4) == 5);
    CHECK_THROWS_AS(PlanarMatching::generator(2, 2), IndexOutOfRange);
}

TEST_CASE("planarity is enforced") {
    // The crossing permutation bottom1-top2, bottom2-top1 is not planar.
    CHECK_THROWS_AS(PlanarMatching(2, {3, 2, 1, 0}), IndexOutOfRange);
    // Perfect-matching violations.
    CHECK_THROWS_AS(PlanarMatching(2, {0, 1, 2, 3}), IndexOutOfRange);
}

TEST_CASE("E_i relations as diagrams") {
    int n = 4;
    PlanarMatching e1 = PlanarMatching::generator(n, 1);
    PlanarMatching e2 = PlanarMatching::generator(n, 2);
    PlanarMatching e3 = PlanarMatching::generator(n, 3);

    SUBCASE("E_i^2 = d E_i") {
        auto [loops, m] = tl_multiply(e1, e1);
        CHECK(loops == 1);
        CHECK(m == e1);
    }
    SUBCASE("E_i E_{i+-1} E_i = E_i") {
        auto [l1, m1] = tl_multiply(e1, e2);
        auto [l2, m2] = tl_multiply(m1, e1);
        CHECK(l1 + l2 == 0);
        CHECK(m2 == e1);
        auto [l3, m3] = tl_multiply(e2, e1);
        auto [l4, m4] = tl_multiply(m3, e2);
        CHECK(l3 + l4 == 0);
        CHECK(m4 == e2);
    }
    SUBCASE("far commutation E_1 E_3 = E_3 E_1") {
        auto [l1, m1] = tl_multiply(e1, e3);
        auto [l2, m2] = tl_multiply(e3, e1);
        CHECK(l1 == l2);
        CHECK(m1 == m2);
    }
    SUBCASE("identity is neutral") {
        auto [loops, m] = tl_multiply(PlanarMatching::identity(n), e2);
        CHECK(loops == 0);
        CHECK(m == e2);
    }
}

TEST_CASE("multiplication is associative including loop counts") {
    SplitMix64 rng(21);
    for (int t = 0; t < 200; ++t) {
        int n = rng.range(2, 4);
        auto pick = [&rng, n] {
            if (rng.below(3) == 0) return PlanarMatching::identity(n);
            return PlanarMatching::generator(n, rng.range(1, n - 1));
        };
        PlanarMatching a = pick(), b = pick(), c = pick();
        auto [l_ab, ab] = tl_multiply(a, b);
        auto [l_ab_c, ab_c] = tl_multiply(ab, c);
        auto [l_bc, bc] = tl_multiply(b, c);
        auto [l_a_bc, a_bc] = tl_multiply(a, bc);
        CHECK(l_ab + l_ab_c == l_bc + l_a_bc);
        CHECK(ab_c == a_bc);
    }
}

TEST_CASE("closure loop counts") {
    CHECK(closure_loop_count(PlanarMatching::identity(2)) == 2);
    CHECK(closure_loop_count(PlanarMatching::generator(2, 1)) == 1);
    CHECK(closure_loop_count(PlanarMatching::generator(3, 1)) == 2);
}

TEST_CASE("rho is the skein image of a crossing") {
    TLElement r = rho_sigma(2, 1, false);
    TLElement want(2);
    want.add_term(PlanarMatching::identity(2), TauLaurent::monomial(1, 0));
    want.add_term(PlanarMatching::generator(2, 1), TauLaurent::monomial(0, 1, -1));
    CHECK(r == want);
}

TEST_CASE("rho(sigma) rho(sigma^-1) = identity") {
    TLElement prod = rho_sigma(2, 1, false) * rho_sigma(2, 1, true);
    CHECK(prod == TLElement::unit(2));
}

TEST_CASE("braid relation rho(s1)rho(s2)rho(s1) = rho(s2)rho(s1)rho(s2)") {
    TLElement s1 = rho_sigma(3, 1, false), s2 = rho_sigma(3, 2, false);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
}

TEST_CASE("rho extends to a group homomorphism on random words") {
    SplitMix64 rng(33);
    for (int t = 0; t < 40; ++t) {
        int n = rng.range(2, 4);
        BraidWord w = random_braid(n, rng.range(0, 6), rng.next());
        BraidWord w_inv(n, {});
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            w_inv.letters.push_back(-*it);
        CHECK(rho_image(w) * rho_image(w_inv) == TLElement::unit(n));
    }
}

TEST_CASE("closure evaluation") {
    SUBCASE("identity closures give powers of d") {
        TauLaurent d = TauLaurent::circle_value();
        CHECK(tl_closure_eval(TLElement::unit(1)) == d);
        CHECK(tl_closure_eval(TLElement::unit(2)) == d * d);
    }
    SUBCASE("rho(sigma_1) closure equals the unknot bracket tau^2 q^-1 d") {
        TauLaurent got = tl_closure_eval(rho_sigma(2, 1, false));
        TauLaurent d = TauLaurent::circle_value();
        CHECK(got == d.times_monomial(1, 0) * d - d.times_monomial(0, 1));  // tau d^2 - q d
        CHECK(got == d.times_monomial(2, -1));                              // = tau^2 q^-1 d
    }
}

TEST_CASE("closure evaluation has the trace property") {
    SplitMix64 rng(55);
    for (int t = 0; t < 60; ++t) {
        int n = rng.range(2, 4);
        TLElement x = random_tl(rng, n), y = random_tl(rng, n);
        CHECK(tl_closure_eval(x * y) == tl_closure_eval(y * x));
    }
}
