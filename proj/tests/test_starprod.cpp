#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/io.hpp"
#include "starq/starprod.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {

// Independent Moyal oracle: iterate the bidifferential operator on explicit
// tensor lists, never collecting by derivative multisets.
SymPoly moyal_oracle(const SymPoly& f, const SymPoly& g, const PoissonBivector& pi) {
    const int d = pi.dim();
    const int n = pi.trunc_order();
    std::vector<std::pair<SymPoly, SymPoly>> tensor = {{f, g}};
    SymPoly result = f * g;
    Rational prefactor = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::pair<SymPoly, SymPoly>> next;
        for (const auto& [a, b] : tensor)
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j) {
                    if (pi.entry(i, j).is_zero()) continue;
                    SymPoly da = a.derivative(i);
                    if (da.is_zero()) continue;
                    SymPoly db = b.derivative(j);
                    if (db.is_zero()) continue;
                    next.emplace_back(pi.entry(i, j) * da, db);
                }
        tensor = std::move(next);
        prefactor /= Rational(2 * k);
        SymPoly level(d, n);
        for (const auto& [a, b] : tensor) level += a * b;
        result += level * HSeries::hbar(n, k, prefactor);
        if (tensor.empty()) break;
    }
    return result;
}

SymPoly gen(int i, int d, int n) { return SymPoly::generator(i, d, n); }

}  // namespace

TEST_CASE("moyal goldens") {
    PoissonBivector pi = examples::weyl(2, 4);
    SymPoly x1 = gen(1, 2, 4), x2 = gen(2, 2, 4);

    // x_i * x_j - x_j * x_i = h pi_ij
    CHECK(describe(moyal_star(x1, x2, pi) - moyal_star(x2, x1, pi)) == "h");

    // unit
    Rng rng(51);
    for (int t = 0; t < 10; ++t) {
        SymPoly f = rng.sympoly(2, 4, 4, 3);
        CHECK(moyal_star(f, SymPoly::one(2, 4), pi) == f);
        CHECK(moyal_star(SymPoly::one(2, 4), f, pi) == f);
    }

    // x1^2 * x2^2: second-order coefficient from the bidifferential oracle
    SymPoly prod = moyal_star(x1 * x1, x2 * x2, pi);
    CHECK(describe(prod) == "x1^2*x2^2 + 2*h*x1*x2 + 1/2*h^2");
    CHECK(prod == moyal_oracle(x1 * x1, x2 * x2, pi));
}

TEST_CASE("moyal matches the tensor-list oracle on random pairs") {
    Rng rng(52);
    PoissonBivector pi = examples::constant_filled(3, 3);
    for (int t = 0; t < 25; ++t) {
        SymPoly f = rng.sympoly(3, 3, 4, 3);
        SymPoly g = rng.sympoly(3, 3, 4, 3);
        CHECK(moyal_star(f, g, pi) == moyal_oracle(f, g, pi));
    }
}

TEST_CASE("moyal is associative at every truncation") {
    Rng rng(53);
    PoissonBivector pi4 = examples::weyl(4, 4);
    for (int t = 0; t < 15; ++t) {
        SymPoly f = rng.sympoly(4, 4, 5, 2);
        SymPoly g = rng.sympoly(4, 4, 5, 2);
        SymPoly h = rng.sympoly(4, 4, 5, 2);
        CHECK(moyal_star(moyal_star(f, g, pi4), h, pi4) ==
              moyal_star(f, moyal_star(g, h, pi4), pi4));
    }
}

TEST_CASE("moyal even part is the plain product modulo h^2") {
    Rng rng(54);
    PoissonBivector pi = examples::weyl(2, 3);
    for (int t = 0; t < 20; ++t) {
        SymPoly f = rng.sympoly(2, 3, 4, 3);
        SymPoly g = rng.sympoly(2, 3, 4, 3);
        SymPoly sym = (moyal_star(f, g, pi) + moyal_star(g, f, pi)) * rational(1, 2);
        SymPoly diff = sym - f * g;
        for (const auto& [m, c] : diff.terms()) {
            CHECK(c.coeff(0) == 0);
            CHECK(c.coeff(1) == 0);
        }
    }
}

TEST_CASE("moyal rejects non-constant structures") {
    SymPoly x1 = gen(1, 3, 2);
    CHECK_THROWS_AS(moyal_star(x1, x1, examples::heisenberg(2)),
                    std::invalid_argument);
}

TEST_CASE("gutt product goldens") {
    GuttProduct g(examples::heisenberg(4), 8);
    SymPoly x1 = gen(1, 3, 4), x2 = gen(2, 3, 4);
    CHECK(describe(g.star(x1, x2)) == "x1*x2 + 1/2*h*x3");

    // commutators on generators reproduce h [ , ] exactly
    PoissonBivector pi = examples::sl2(4);
    GuttProduct gs(pi, 8);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            SymPoly xi = gen(i, 3, 4), xj = gen(j, 3, 4);
            CHECK(gs.star(xi, xj) - gs.star(xj, xi) ==
                  pi.entry(i, j) * HSeries::hbar(4));
        }
}

TEST_CASE("abelian gutt product is the commutative product") {
    GuttProduct g(PoissonBivector(2, 3, {}), 8);
    Rng rng(55);
    for (int t = 0; t < 15; ++t) {
        SymPoly f = rng.sympoly(2, 3, 4, 3);
        SymPoly gg = rng.sympoly(2, 3, 4, 3);
        CHECK(g.star(f, gg) == f * gg);
    }
}

TEST_CASE("gutt product is associative") {
    Rng rng(56);
    GuttProduct g(examples::sl2(4), 12);
    for (int t = 0; t < 10; ++t) {
        SymPoly f = rng.sympoly(3, 4, 4, 2);
        SymPoly gg = rng.sympoly(3, 4, 4, 2);
        SymPoly h = rng.sympoly(3, 4, 4, 2);
        CHECK(g.star(g.star(f, gg), h) == g.star(f, g.star(gg, h)));
    }
    // a few degree-5 triples at the wider certification bound
    GuttProduct g5(examples::sl2(4), 15);
    for (int t = 0; t < 3; ++t) {
        SymPoly f = rng.sympoly(3, 4, 5, 2);
        SymPoly gg = rng.sympoly(3, 4, 5, 2);
        SymPoly h = rng.sympoly(3, 4, 5, 2);
        CHECK(g5.star(g5.star(f, gg), h) == g5.star(f, g5.star(gg, h)));
    }
}

TEST_CASE("gutt first-order term is half the calibrated bracket") {
    Rng rng(57);
    PoissonBivector pi = examples::solvable2(2);
    GuttProduct g(pi, 10);
    for (int t = 0; t < 15; ++t) {
        SymPoly f = rng.sympoly(2, 2, 4, 2);
        SymPoly gg = rng.sympoly(2, 2, 4, 2);
        SymPoly prod = g.star(f, gg);
        SymPoly expect_h1 = pi.bidiff(f, gg) * rational(1, 2);
        SymPoly correction = prod - f * gg;
        for (const auto& [m, c] : correction.terms())
            CHECK(c.coeff(1) == expect_h1.coeff(m).coeff(0));
    }
}

TEST_CASE("the Casimir element is central in the transported sl2 algebra") {
    GuttProduct g(examples::sl2(4), 10);
    SymPoly casimir(3, 4);
    for (int i = 1; i <= 3; ++i) casimir += gen(i, 3, 4) * gen(i, 3, 4);
    Rng rng(65);
    for (int i = 1; i <= 3; ++i) {
        SymPoly xi = gen(i, 3, 4);
        CHECK(g.star(casimir, xi) == g.star(xi, casimir));
    }
    for (int t = 0; t < 5; ++t) {
        SymPoly f = rng.sympoly(3, 4, 3, 2);
        CHECK(g.star(casimir, f) == g.star(f, casimir));
    }
}

TEST_CASE("the central generator of the Heisenberg algebra stays central") {
    GuttProduct g(examples::heisenberg(4), 10);
    SymPoly x3 = gen(3, 3, 4);
    Rng rng(66);
    for (int t = 0; t < 10; ++t) {
        SymPoly f = rng.sympoly(3, 4, 4, 2);
        CHECK(g.star(x3, f) == g.star(f, x3));
        CHECK(g.star(x3, f) == x3 * f);
    }
}

TEST_CASE("transport is triangular and invertible") {
    GuttProduct g(examples::sl2(3), 8);
    Rng rng(58);
    for (int t = 0; t < 20; ++t) {
        SymPoly f = rng.sympoly(3, 3, 5, 3);
        CHECK(g.phi_inverse(g.phi(f)) == f);
        // phi agrees with the direct route NF(Sym(f))
        CHECK(g.phi(f) == g.system().normal_form(symmetrize(f)));
    }
}

TEST_CASE("gutt degree overflow is rejected") {
    GuttProduct g(examples::heisenberg(2), 4);
    SymPoly cube = SymPoly::generator(1, 3, 2) * SymPoly::generator(2, 3, 2) *
                   SymPoly::generator(3, 3, 2);
    CHECK_THROWS_AS(g.star(cube, cube), std::domain_error);  // product degree 6 > 4
}

TEST_CASE("gutt rejects non-Jacobi structures") {
    PoissonBivector bad(3, 2,
                        {{1, 2, SymPoly::generator(3, 3, 2)},
                         {1, 3, SymPoly::generator(1, 3, 2)}});
    CHECK_THROWS_AS(GuttProduct(bad, 6), std::invalid_argument);
}

TEST_CASE("first-order star") {
    // plain product for the zero structure
    PoissonBivector zero(2, 1, {});
    Rng rng(59);
    for (int t = 0; t < 10; ++t) {
        SymPoly f = rng.sympoly(2, 1, 3, 2);
        SymPoly g = rng.sympoly(2, 1, 3, 2);
        CHECK(first_order_star(f, g, zero) == f * g);
    }

    // associator vanishes mod h^2 for every shipped Poisson structure
    for (const PoissonBivector& pi :
         {examples::quantum_plane(1), examples::quadratic_x1sq(1),
          examples::weyl(2, 1), examples::solvable2(1)}) {
        Rng r2(60);
        for (int t = 0; t < 30; ++t) {
            SymPoly f = r2.sympoly(2, 1, 4, 2);
            SymPoly g = r2.sympoly(2, 1, 4, 2);
            SymPoly h = r2.sympoly(2, 1, 4, 2);
            CHECK(first_order_star(first_order_star(f, g, pi), h, pi) ==
                  first_order_star(f, first_order_star(g, h, pi), pi));
        }
    }
    for (const PoissonBivector& pi : {examples::heisenberg(1), examples::sl2(1)}) {
        Rng r2(64);
        for (int t = 0; t < 30; ++t) {
            SymPoly f = r2.sympoly(3, 1, 4, 2);
            SymPoly g = r2.sympoly(3, 1, 4, 2);
            SymPoly h = r2.sympoly(3, 1, 4, 2);
            CHECK(first_order_star(first_order_star(f, g, pi), h, pi) ==
                  first_order_star(f, first_order_star(g, h, pi), pi));
        }
    }

    // agrees with Moyal mod h^2 for constant structures
    PoissonBivector pi1 = examples::weyl(2, 1);
    Rng r3(61);
    for (int t = 0; t < 20; ++t) {
        SymPoly f = r3.sympoly(2, 1, 4, 3);
        SymPoly g = r3.sympoly(2, 1, 4, 3);
        CHECK(first_order_star(f, g, pi1) == moyal_star(f, g, pi1));
    }
}

TEST_CASE("wheel coefficients") {
    std::vector<Rational> b = modified_bernoulli_coeffs(8);
    CHECK(b[2] == rational(1, 48));
    CHECK(b[4] == rational(-1, 5760));
    CHECK(b[1] == 0);
    CHECK(b[3] == 0);
    CHECK(b[5] == 0);
    CHECK(b[6] == rational(1, 362880));
}

TEST_CASE("trace operators") {
    // unimodular: c_1 = 0 for Heisenberg and sl2
    CHECK(trace_power_operator(examples::heisenberg(2), 1).empty());
    CHECK(trace_power_operator(examples::sl2(2), 1).empty());

    // 2-dim solvable: c_1 = -d_2
    DiffOperator c1 = trace_power_operator(examples::solvable2(2), 1);
    REQUIRE(c1.size() == 1);
    SymMonomial d2(2);
    d2.exp = {0, 1};
    CHECK(c1.at(d2) == -1);

    // sl2 cyclic: ad x_i has eigenvalue structure with tr(ad^2) = -2 per
    // generator pair; the operator is a multiple of the Laplacian
    DiffOperator c2 = trace_power_operator(examples::sl2(2), 2);
    CHECK(c2.size() == 3);
    for (int i = 1; i <= 3; ++i) {
        SymMonomial m(3);
        m.exp[static_cast<size_t>(i - 1)] = 2;
        CHECK(c2.at(m) == -2);
    }
}

TEST_CASE("duflo application goldens") {
    DufloSeries d = duflo_series(examples::solvable2(4), 4);
    CHECK(d.one_wheel == rational(-1, 4));
    SymPoly x2 = gen(2, 2, 4);
    // exp(-h/4 c_1) x_2 = x_2 - h/4 tr(ad x_2) with tr(ad x_2) = -1
    SymPoly expect = x2 + SymPoly::constant(1, 2, 4) * HSeries::hbar(4, 1, rational(1, 4));
    CHECK(duflo_apply(d, x2) == expect);

    // identity on everything for unimodular algebras at N <= 1
    DufloSeries dh = duflo_series(examples::heisenberg(1), 1);
    Rng rng(62);
    for (int t = 0; t < 10; ++t) {
        SymPoly f = rng.sympoly(3, 1, 3, 2);
        CHECK(duflo_apply(dh, f) == f);
    }
}

TEST_CASE("one-wheel operator is a derivation of the transported product") {
    PoissonBivector pi = examples::solvable2(4);
    GuttProduct g(pi, 8);
    DiffOperator c1 = trace_power_operator(pi, 1);
    Rng rng(63);
    for (int t = 0; t < 25; ++t) {
        SymPoly f = rng.sympoly(2, 4, 4, 2);
        SymPoly gg = rng.sympoly(2, 4, 4, 2);
        CHECK(apply_diff_operator(c1, g.star(f, gg)) ==
              g.star(apply_diff_operator(c1, f), gg) +
                  g.star(f, apply_diff_operator(c1, gg)));
    }
}

TEST_CASE("truncation order 0 degenerates to the commutative product") {
    Rng rng(67);
    PoissonBivector weyl0 = examples::weyl(2, 0);
    GuttProduct gutt0(examples::heisenberg(0), 8);
    for (int t = 0; t < 10; ++t) {
        SymPoly f2 = rng.sympoly(2, 0, 4, 3);
        SymPoly g2 = rng.sympoly(2, 0, 4, 3);
        CHECK(moyal_star(f2, g2, weyl0) == f2 * g2);
        SymPoly f3 = rng.sympoly(3, 0, 4, 3);
        SymPoly g3 = rng.sympoly(3, 0, 4, 3);
        CHECK(gutt0.star(f3, g3) == f3 * g3);
    }
}

TEST_CASE("star algebra dispatch") {
    CHECK(StarAlgebra::make(examples::weyl(2, 2), 6).kind() ==
          StarAlgebra::Kind::moyal);
    CHECK(StarAlgebra::make(examples::heisenberg(2), 6).kind() ==
          StarAlgebra::Kind::gutt_transport);
    CHECK(StarAlgebra::make(examples::quantum_plane(1), 6).kind() ==
          StarAlgebra::Kind::first_order);

    SymPoly mixed = SymPoly::one(2, 1) + SymPoly::generator(1, 2, 1);
    PoissonBivector gen_pi(2, 1, {{1, 2, mixed}});
    CHECK_THROWS_AS(StarAlgebra::make(gen_pi, 6), std::invalid_argument);
}
