#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/hseries.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {
HSeries random_hseries(Rng& rng, int trunc) {
    HSeries c(trunc);
    for (int k = 0; k <= trunc; ++k)
        if (rng.below(3) != 0) c.set_coeff(k, rng.small_rational());
    return c;
}
}  // namespace

TEST_CASE("truncated products") {
    // (1 + h)(1 - h) at N=1: the h^2 term is discarded
    HSeries a = HSeries::one(1) + HSeries::hbar(1);
    HSeries b = HSeries::one(1) - HSeries::hbar(1);
    CHECK(a * b == HSeries::one(1));

    // (1 + h)^2 at N=2
    HSeries c = HSeries::one(2) + HSeries::hbar(2);
    HSeries sq = c * c;
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(2) == 1);

    // (h/2)(h/3) = h^2/6 at N=2
    HSeries d = HSeries::hbar(2, 1, rational(1, 2));
    HSeries e = HSeries::hbar(2, 1, rational(1, 3));
    CHECK(d * e == HSeries::hbar(2, 2, rational(1, 6)));
}

TEST_CASE("mismatched truncation orders are a usage error") {
    HSeries a = HSeries::one(2);
    HSeries b = HSeries::one(3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng.below(5));
        HSeries a = random_hseries(rng, n);
        HSeries b = random_hseries(rng, n);
        HSeries c = random_hseries(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * HSeries::one(n) == a);
    }
}

TEST_CASE("inverse of units") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rng.below(5));
        HSeries a = random_hseries(rng, n);
        a.set_coeff(0, rng.small_rational());  // force a unit
        CHECK(a * a.inverse() == HSeries::one(n));
    }
    CHECK_THROWS_AS(HSeries::hbar(2).inverse(), std::domain_error);
}

TEST_CASE("nilpotence of h") {
    HSeries h = HSeries::hbar(3);
    HSeries p = h * h * h * h;  // h^4 = 0 at N=3
    CHECK(p.is_zero());
}
