#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/verify.hpp"

using namespace starq;

TEST_CASE("constant suite passes for the shipped structures") {
    VerificationReport r2 = verify_constant(examples::weyl(2, 4), 4, 4, 50, 1);
    CHECK(r2.pass());
    VerificationReport r3 = verify_constant(examples::constant_filled(3, 4), 4, 4, 50, 1);
    CHECK(r3.pass());
}

TEST_CASE("constant suite reduces to the commutative case for pi = 0") {
    VerificationReport r = verify_constant(PoissonBivector(2, 4, {}), 4, 4, 30, 1);
    CHECK(r.pass());
}

TEST_CASE("linear suite passes for the shipped algebras") {
    CHECK(verify_linear(examples::heisenberg(4), 4, 4, 1, 40).pass());
    CHECK(verify_linear(examples::sl2(4), 4, 4, 1, 40).pass());
    CHECK(verify_linear(examples::solvable2(4), 4, 4, 1, 40).pass());
}

TEST_CASE("linear suite collapses to the classical case for the abelian algebra") {
    CHECK(verify_linear(PoissonBivector(3, 4, {}), 4, 4, 1, 20).pass());
}

TEST_CASE("linear suite flags a non-Jacobi structure") {
    PoissonBivector bad(3, 4,
                        {{1, 2, SymPoly::generator(3, 3, 4)},
                         {1, 3, SymPoly::generator(1, 3, 4)}});
    VerificationReport r = verify_linear(bad, 3, 4, 1, 5);
    CHECK(!r.pass());
    bool jacobi_failed = false, completion_failed = false;
    for (const auto& c : r.checks) {
        if (c.name == "jacobi-defects-vanish" && !c.pass) jacobi_failed = true;
        if (c.name == "completion" && !c.pass) completion_failed = true;
    }
    CHECK(jacobi_failed);
    CHECK(completion_failed);
}

TEST_CASE("quadratic suite passes modulo h^2") {
    CHECK(verify_quadratic(examples::quantum_plane(1), 6, 1, 40).pass());
    CHECK(verify_quadratic(examples::quadratic_x1sq(1), 6, 1, 40).pass());
    CHECK(verify_quadratic(PoissonBivector(2, 1, {}), 6, 1, 20).pass());

    // d = 3 diagonal quadratic structure pi_ij = x_i x_j: its completion has
    // genuine overlap ambiguities, all of which must resolve modulo h^2
    SymPoly x1 = SymPoly::generator(1, 3, 1);
    SymPoly x2 = SymPoly::generator(2, 3, 1);
    SymPoly x3 = SymPoly::generator(3, 3, 1);
    PoissonBivector qspace(3, 1, {{1, 2, x1 * x2}, {1, 3, x1 * x3}, {2, 3, x2 * x3}});
    REQUIRE(qspace.is_poisson());
    CHECK(verify_quadratic(qspace, 6, 1, 40).pass());
}

TEST_CASE("koszul window") {
    CHECK(verify_koszul(2, 4).pass());
    CHECK(verify_koszul(3, 4).pass());
    CHECK_THROWS_AS(verify_koszul(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_koszul(3, 6), std::invalid_argument);
}

TEST_CASE("every mutation suite detects its seeded defect") {
    CHECK(mutation_broken_jacobi(4).pass());
    CHECK(mutation_flipped_delta_sign(4).pass());
    CHECK(mutation_corrupted_rule(4).pass());
    CHECK(mutation_perturbed_symmetrization(examples::weyl(2, 4), 4, 4, 7).pass());
    CHECK(mutation_stasheff_sign(4).pass());
}

TEST_CASE("mutation counterexamples are populated") {
    VerificationReport r = mutation_corrupted_rule(4);
    bool has_counterexample = false;
    for (const auto& c : r.checks)
        if (!c.counterexample.empty()) has_counterexample = true;
    CHECK(has_counterexample);
}

TEST_CASE("reports are byte-stable for a fixed seed") {
    VerificationReport a = verify_linear(examples::heisenberg(3), 3, 3, 17, 15);
    VerificationReport b = verify_linear(examples::heisenberg(3), 3, 3, 17, 15);
    CHECK(a.to_json().dump() == b.to_json().dump());

    // a different seed changes the sampled polynomials but not the verdict
    VerificationReport c = verify_linear(examples::heisenberg(3), 3, 3, 18, 15);
    CHECK(c.pass());
}

TEST_CASE("rng streams are deterministic") {
    Rng a(123), b(123);
    for (int t = 0; t < 100; ++t) CHECK(a.next() == b.next());
    Rng c(1);
    SymPoly p = c.sympoly(3, 2, 4, 3);
    Rng d(1);
    CHECK(d.sympoly(3, 2, 4, 3) == p);
}

TEST_CASE("shipped cases run end to end with their expected outcomes") {
    for (const VerificationCase& c : shipped_cases(3)) {
        VerificationReport r = run_case(c);
        CHECK(r.pass() == c.expect_pass);
    }
}

TEST_CASE("suite guards") {
    CHECK_THROWS_AS(verify_constant(examples::heisenberg(4), 4, 4, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_linear(examples::weyl(2, 4), 4, 4, 1, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_quadratic(examples::heisenberg(1), 6, 1, 10),
                    std::invalid_argument);
}
