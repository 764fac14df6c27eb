#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/ainfty.hpp"
#include "starq/io.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {
constexpr IndexSet e1 = 0b001, e2 = 0b010, e12 = 0b011, e3 = 0b100, e23 = 0b110;
}

TEST_CASE("constant instance has exactly arities 0 and 2") {
    AInftyInstance inst = build_constant_instance(examples::weyl(2, 4));
    CHECK(inst.components().arities_present() == std::set<int>{0, 2});

    // d^0(1) = h pi
    ExtElement curv = inst.curvature();
    CHECK(curv.coeff(e12) == HSeries::hbar(4));
    CHECK(curv.terms().size() == 1);
    CHECK(!inst.is_flat());

    // d^2(se_1 | se_2) = -se_12 (the |b_1| = 1 sign)
    ExtElement d2 = inst.components().eval({e1, e2});
    CHECK(d2 == -ExtElement::basis(e12, 2, 4));
    // wedge nilpotence
    CHECK(inst.components().eval({e1, e1}).is_zero());
}

TEST_CASE("constant builder rejects non-constant structures") {
    CHECK_THROWS_AS(build_constant_instance(examples::heisenberg(2)),
                    std::invalid_argument);
}

TEST_CASE("linear instance is the CE structure") {
    AInftyInstance heis = build_linear_instance(examples::heisenberg(4));
    CHECK(heis.components().arities_present() == std::set<int>{1, 2});
    CHECK(heis.is_flat());

    // d^1(se_3) = h se_12, d^1(se_1) = d^1(se_2) = 0
    CHECK(heis.components().eval({e3}) ==
          ExtElement::basis(e12, 3, 4) * HSeries::hbar(4));
    CHECK(heis.components().eval({e1}).is_zero());
    CHECK(heis.components().eval({e2}).is_zero());

    // abelian structure degenerates to the wedge DGA
    AInftyInstance ab = build_linear_instance(PoissonBivector(3, 4, {}));
    CHECK(ab.components().arities_present() == std::set<int>{2});

    CHECK_THROWS_AS(build_linear_instance(examples::weyl(2, 4)),
                    std::invalid_argument);
}

TEST_CASE("d^1 squares to zero exactly when Jacobi holds") {
    const IndexSet full = IndexSet{1} << 3;
    auto d1_squared_vanishes = [&](const AInftyInstance& inst) {
        for (IndexSet s = 0; s < full; ++s) {
            ExtElement once = inst.components().eval({s});
            ExtElement twice = eval_on_elements(inst.components(), {once});
            if (!twice.is_zero()) return false;
        }
        return true;
    };

    CHECK(d1_squared_vanishes(build_linear_instance(examples::heisenberg(4))));
    CHECK(d1_squared_vanishes(build_linear_instance(examples::sl2(4))));

    // non-Jacobi constants: d^1 fails to square to zero
    PoissonBivector bad(3, 4,
                        {{1, 2, SymPoly::generator(3, 3, 4)},
                         {1, 3, SymPoly::generator(1, 3, 4)}});
    CHECK(!bad.is_poisson());
    CHECK(!d1_squared_vanishes(build_linear_instance(bad)));
}

TEST_CASE("stasheff relations hold exhaustively to arity 4") {
    CHECK(check_stasheff(build_constant_instance(examples::weyl(2, 4)), 4).ok());
    CHECK(check_stasheff(build_constant_instance(examples::constant_filled(3, 4)), 4).ok());
    CHECK(check_stasheff(build_linear_instance(examples::heisenberg(4)), 4).ok());
    CHECK(check_stasheff(build_linear_instance(examples::sl2(4)), 4).ok());
    CHECK(check_stasheff(build_linear_instance(examples::solvable2(4)), 4).ok());
}

TEST_CASE("stasheff with a nonvanishing d^1 on wedge degree 2") {
    // in d = 3 the derivation extension of d^1 dies on /\^2 for every
    // example; adding a central generator makes it genuinely nonzero there
    PoissonBivector pi(4, 2,
                       {{1, 2, SymPoly::generator(3, 4, 2)},
                        {2, 3, SymPoly::generator(1, 4, 2)},
                        {1, 3, -SymPoly::generator(2, 4, 2)}});
    REQUIRE(pi.is_poisson());
    AInftyInstance inst = build_linear_instance(pi);
    // d^1(se_14) = d^1(se_1) /\ e_4 = h se_234
    ExtElement d14 = inst.components().eval({0b1001});
    CHECK(d14 == ExtElement::basis(0b1110, 4, 2) * HSeries::hbar(2));
    CHECK(check_stasheff(inst, 3).ok());
    CHECK(check_unitality(inst).ok());
}

TEST_CASE("corrupted wedge component is reported") {
    AInftyInstance inst = build_linear_instance(examples::sl2(4));
    ExtElement flipped = -inst.components().eval({e1, e2});
    inst.components().set({e1, e2}, flipped);
    StasheffReport r = check_stasheff(inst, 4);
    CHECK(!r.ok());
    CHECK(r.violations.front().arity <= 3);
}

TEST_CASE("non-Jacobi structure violates stasheff at arity 1") {
    PoissonBivector bad(3, 4,
                        {{1, 2, SymPoly::generator(3, 3, 4)},
                         {1, 3, SymPoly::generator(1, 3, 4)}});
    StasheffReport r = check_stasheff(build_linear_instance(bad), 2);
    CHECK(!r.ok());
    CHECK(r.violations.front().arity == 1);
}

TEST_CASE("stasheff feasibility guard") {
    AInftyInstance inst = build_constant_instance(examples::weyl(6, 1));
    CHECK_THROWS_AS(check_stasheff(inst, 4), std::invalid_argument);
}

TEST_CASE("unitality") {
    AInftyInstance inst = build_constant_instance(examples::weyl(2, 4));
    CHECK(check_unitality(inst).ok());

    // d^2(s1, e_I) = e_I and d^2(e_I, s1) = (-1)^{|I|} e_I
    CHECK(inst.components().eval({0, e12}) == ExtElement::basis(e12, 2, 4));
    CHECK(inst.components().eval({e12, 0}) == ExtElement::basis(e12, 2, 4));
    CHECK(inst.components().eval({e1, 0}) == -ExtElement::basis(e1, 2, 4));

    AInftyInstance lin = build_linear_instance(examples::sl2(4));
    CHECK(check_unitality(lin).ok());
    // d^1(s1) = 0 since the CE differential kills the unit
    CHECK(lin.components().eval({IndexSet{0}}).is_zero());

    // breaking the unit axiom is reported
    AInftyInstance broken = build_constant_instance(examples::weyl(2, 4));
    broken.components().set({0, e1}, ExtElement::basis(e1, 2, 4) * Rational(2));
    CHECK(!check_unitality(broken).ok());
}

TEST_CASE("flatness predicate") {
    CHECK(build_linear_instance(examples::heisenberg(2)).is_flat());
    CHECK(!build_constant_instance(examples::weyl(2, 2)).is_flat());
    CHECK(build_constant_instance(PoissonBivector(2, 2, {})).is_flat());
}

TEST_CASE("components must have shifted degree +1") {
    TaylorComponents tc(3, 1);
    // arity 1 on a singleton must land in /\^2
    CHECK_THROWS_AS(tc.set({e1}, ExtElement::basis(e3, 3, 1)), std::invalid_argument);
    CHECK_NOTHROW(tc.set({e1}, ExtElement::basis(e23, 3, 1)));
    // curvature lands in /\^2
    CHECK_THROWS_AS(tc.set({}, ExtElement::basis(e1, 3, 1)), std::invalid_argument);
}

TEST_CASE("custom components round-trip through JSON and stay unverified") {
    AInftyInstance inst = build_linear_instance(examples::sl2(3));
    Json j = to_json(inst);
    AInftyInstance back = instance_from_json(j);
    CHECK(!back.verified());
    CHECK(back.dim() == 3);
    CHECK(back.trunc_order() == 3);
    CHECK(back.components().entries().size() == inst.components().entries().size());
    for (const auto& [tuple, value] : inst.components().entries())
        CHECK(back.components().eval(tuple) == value);

    StasheffReport r = check_stasheff(back, 4);
    CHECK(r.ok());
    back.mark_verified();
    CHECK(back.verified());
}
