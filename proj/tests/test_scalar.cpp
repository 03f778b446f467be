#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "ebraid/braid.hpp"  // SplitMix64
#include "ebraid/scalar.hpp"

using namespace ebraid;

namespace {

CyclotomicInt4 tau(int k) { return CyclotomicInt4::tau_power(k); }

CyclotomicInt4 random_cyc(SplitMix64& rng) {
    CyclotomicInt4 c;
    for (int j = 0; j < 4; ++j)
        c += CyclotomicInt4::monomial(Int(rng.range(-9, 9)), j);
    return c;
}

TauLaurent random_poly(SplitMix64& rng) {
    TauLaurent p;
    int terms = rng.range(0, 5);
    for (int t = 0; t < terms; ++t)
        p += TauLaurent::monomial(rng.range(0, 3), rng.range(-6, 6), rng.range(-9, 9));
    return p;
}

}  // namespace

TEST_CASE("tau^4 = 1") {
    CHECK(tau(1) * tau(3) == CyclotomicInt4(1));
    CHECK(tau(2) * tau(2) == CyclotomicInt4(1));
    CHECK((CyclotomicInt4(1) + tau(1)) * (CyclotomicInt4(1) - tau(1)) ==
          CyclotomicInt4(1) - tau(2));
}

TEST_CASE("cyclotomic ring axioms on random elements") {
    SplitMix64 rng(101);
    for (int t = 0; t < 200; ++t) {
        CyclotomicInt4 a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * CyclotomicInt4(1) == a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == CyclotomicInt4());
    }
}

TEST_CASE("invertible monomials are exactly +-tau^k") {
    for (int k = 0; k < 4; ++k) {
        for (long c : {-3L, -2L, -1L, 1L, 2L, 3L}) {
            CyclotomicInt4 m = CyclotomicInt4::monomial(Int(c), k);
            bool invertible = false;
            // A monomial inverse must again be a monomial c'tau^j with cc' = 1.
            for (int j = 0; j < 4 && !invertible; ++j)
                for (long c2 : {-1L, 1L})
                    if (m * CyclotomicInt4::monomial(Int(c2), j) == CyclotomicInt4(1)) invertible = true;
            CHECK(invertible == (c == 1 || c == -1));
        }
    }
}

TEST_CASE("multiplying by tau^k permutes stored coefficients") {
    SplitMix64 rng(7);
    for (int t = 0; t < 50; ++t) {
        CyclotomicInt4 a = random_cyc(rng);
        for (int k = 0; k < 4; ++k) {
            CyclotomicInt4 shifted = a.times_tau(k);
            CHECK(shifted == a * tau(k));
            // bijection on coefficients: same multiset
            std::multiset<std::string> before, after;
            for (int j = 0; j < 4; ++j) {
                before.insert(a.coeff(j).get_str());
                after.insert(shifted.coeff(j).get_str());
            }
            CHECK(before == after);
        }
    }
}

TEST_CASE("pi scalar units and arithmetic") {
    PiScalar pi = PiScalar::pi();
    CHECK(pi * pi == PiScalar(1));
    CHECK(PiScalar(1).is_unit());
    CHECK(PiScalar(-1, 0).is_unit());
    CHECK(pi.is_unit());
    CHECK((-pi).is_unit());
    CHECK_FALSE(PiScalar(1, 1).is_unit());
    CHECK_FALSE(PiScalar(2, 0).is_unit());
    CHECK(PiScalar(3, -2) * PiScalar(1, 1) == PiScalar(1, 1));
    CHECK(PiScalar(2, 5).specialize(-1) == -3);
}

TEST_CASE("d arithmetic") {
    TauLaurent d = TauLaurent::circle_value();
    SUBCASE("d*d expands with tau^4 = 1") {
        TauLaurent want = TauLaurent::monomial(2, 2) + TauLaurent::monomial(0, 0, 2) +
                          TauLaurent::monomial(2, -2);
        CHECK(d * d == want);
    }
    SUBCASE("q * q^-1 = 1") {
        CHECK(TauLaurent::monomial(0, 1) * TauLaurent::monomial(0, -1) == TauLaurent::one());
    }
    SUBCASE("additive inverse") { CHECK((d + (-d)).is_zero()); }
}

TEST_CASE("tau_monomial examples") {
    CHECK(TauLaurent::monomial(3, 1, 1).to_text() == "1*t^3*q^1");
    CHECK(TauLaurent::monomial(0, 0, 1) == TauLaurent::one());
    CHECK(TauLaurent::monomial(2, -2, -3).to_text() == "-3*t^2*q^-2");
}

TEST_CASE("laurent ring axioms on random polynomials") {
    SplitMix64 rng(42);
    for (int t = 0; t < 100; ++t) {
        TauLaurent p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + (-p) == TauLaurent::zero());
        CHECK(p * TauLaurent::one() == p);
    }
}

TEST_CASE("specialize_tau on d") {
    TauLaurent d = TauLaurent::circle_value();
    GaussLaurent at1 = specialize_tau(d, 0);
    CHECK(at1 == GaussLaurent::monomial(1, GaussInt(1)) + GaussLaurent::monomial(-1, GaussInt(1)));
    GaussLaurent atm1 = specialize_tau(d, 2);
    CHECK(atm1 ==
          GaussLaurent::monomial(1, GaussInt(-1)) + GaussLaurent::monomial(-1, GaussInt(-1)));
}

TEST_CASE("specialize_tau of the trefoil invariant at tau=1") {
    // tau^3 q + tau q^3 + tau^3 q^5 - tau^3 q^9  |->  q + q^3 + q^5 - q^9
    TauLaurent p = TauLaurent::monomial(3, 1) + TauLaurent::monomial(1, 3) +
                   TauLaurent::monomial(3, 5) + TauLaurent::monomial(3, 9, -1);
    GaussLaurent want = GaussLaurent::monomial(1, GaussInt(1)) + GaussLaurent::monomial(3, GaussInt(1)) +
                        GaussLaurent::monomial(5, GaussInt(1)) + GaussLaurent::monomial(9, GaussInt(-1));
    CHECK(specialize_tau(p, 0) == want);
}

TEST_CASE("specialize_tau is a ring homomorphism") {
    SplitMix64 rng(9);
    for (int t = 0; t < 100; ++t) {
        TauLaurent p = random_poly(rng), q = random_poly(rng);
        for (int k = 0; k < 4; ++k) {
            CHECK(specialize_tau(p * q, k) == specialize_tau(p, k) * specialize_tau(q, k));
            CHECK(specialize_tau(p + q, k) == specialize_tau(p, k) + specialize_tau(q, k));
        }
    }
}

TEST_CASE("idempotent components") {
    SUBCASE("1 is not integrally decomposable") {
        for (int k = 0; k < 4; ++k)
            CHECK_THROWS_AS(idempotent_component(TauLaurent::one(), k), ComponentNotIntegral);
    }
    SUBCASE("4 is integral in every component") {
        for (int k = 0; k < 4; ++k)
            CHECK(idempotent_component(TauLaurent::monomial(0, 0, 4), k) ==
                  GaussLaurent::monomial(0, GaussInt(1)));
    }
    SUBCASE("components reconstruct d over the rational extension") {
        CHECK(idempotent_decomposition_reconstructs(TauLaurent::circle_value()));
    }
    SUBCASE("components reconstruct random polynomials") {
        SplitMix64 rng(5);
        for (int t = 0; t < 50; ++t) CHECK(idempotent_decomposition_reconstructs(random_poly(rng)));
    }
}

TEST_CASE("canonical text and json rendering") {
    TauLaurent p = TauLaurent::monomial(3, 9, -1) + TauLaurent::monomial(3, 1) +
                   TauLaurent::monomial(1, 3) + TauLaurent::monomial(3, 5);
    CHECK(p.to_text() == "1*t^3*q^1 + 1*t^1*q^3 + 1*t^3*q^5 + -1*t^3*q^9");
    CHECK(p.to_json() ==
          R"({"terms":[{"c":1,"tau":3,"q":1},{"c":1,"tau":1,"q":3},{"c":1,"tau":3,"q":5},{"c":-1,"tau":3,"q":9}]})");
    CHECK(TauLaurent::zero().to_text() == "0");
    // ascending by q, then by tau inside one q bucket
    TauLaurent mixed = TauLaurent::monomial(2, 0, 5) + TauLaurent::monomial(0, 0, 7);
    CHECK(mixed.to_text() == "7*t^0*q^0 + 5*t^2*q^0");
}
