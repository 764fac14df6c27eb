#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/ext.hpp"
#include "starq/ncpoly.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {

NCPoly random_ncpoly(Rng& rng, int dim, int trunc, int max_deg, int terms) {
    NCPoly p(dim, trunc);
    for (int t = 0; t < terms; ++t) {
        NCWord w;
        int len = static_cast<int>(rng.below(static_cast<size_t>(max_deg) + 1));
        for (int k = 0; k < len; ++k)
            w.letters.push_back(static_cast<int>(rng.below(static_cast<size_t>(dim))) + 1);
        p.add_term(w, HSeries::constant(rng.small_rational(), trunc));
    }
    return p;
}

ExtElement random_ext(Rng& rng, int dim, int trunc, int terms) {
    ExtElement e(dim, trunc);
    for (int t = 0; t < terms; ++t)
        e.add_term(static_cast<IndexSet>(rng.below(size_t{1} << dim)),
                   HSeries::constant(rng.small_rational(), trunc));
    return e;
}

ExtElement random_homogeneous_ext(Rng& rng, int dim, int trunc, int deg) {
    ExtElement e(dim, trunc);
    for (IndexSet s = 0; s < (IndexSet{1} << dim); ++s)
        if (subset_size(s) == deg && rng.below(2) == 0)
            e.add_term(s, HSeries::constant(rng.small_rational(), trunc));
    return e;
}

}  // namespace

TEST_CASE("sympoly ring axioms") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        SymPoly a = rng.sympoly(3, 2, 3, 3);
        SymPoly b = rng.sympoly(3, 2, 3, 3);
        SymPoly c = rng.sympoly(3, 2, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * SymPoly::one(3, 2) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("ncpoly ring axioms") {
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
        NCPoly a = random_ncpoly(rng, 2, 2, 3, 3);
        NCPoly b = random_ncpoly(rng, 2, 2, 3, 3);
        NCPoly c = random_ncpoly(rng, 2, 2, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * NCPoly::one(2, 2) == a);
        CHECK(NCPoly::one(2, 2) * a == a);
    }
}

TEST_CASE("ext wedge axioms") {
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        ExtElement a = random_ext(rng, 4, 1, 3);
        ExtElement b = random_ext(rng, 4, 1, 3);
        ExtElement c = random_ext(rng, 4, 1, 3);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
        CHECK(wedge(a, ExtElement::one(4, 1)) == a);
        CHECK(wedge(ExtElement::one(4, 1), a) == a);
    }
}

TEST_CASE("wedge graded commutativity") {
    Rng rng(14);
    for (int t = 0; t < 100; ++t) {
        int p = static_cast<int>(rng.below(4));
        int q = static_cast<int>(rng.below(4));
        ExtElement a = random_homogeneous_ext(rng, 4, 1, p);
        ExtElement b = random_homogeneous_ext(rng, 4, 1, q);
        ExtElement ab = wedge(a, b);
        ExtElement ba = wedge(b, a);
        if ((p * q) % 2 != 0) ba = -ba;
        CHECK(ab == ba);
    }
}

TEST_CASE("wedge nilpotence and signs") {
    ExtElement e1 = ExtElement::basis(IndexSet{1} << 0, 3, 0);
    ExtElement e2 = ExtElement::basis(IndexSet{1} << 1, 3, 0);
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(e1, e2) == -wedge(e2, e1));
    CHECK(wedge(e2, e1).coeff(0b011).at_zero() == -1);
}

TEST_CASE("symmetrize on the stated monomials") {
    SymPoly x1 = SymPoly::generator(1, 2, 0);
    SymPoly x2 = SymPoly::generator(2, 2, 0);

    NCPoly s1 = symmetrize(x1);
    CHECK(s1 == NCPoly::generator(1, 2, 0));

    NCPoly s12 = symmetrize(x1 * x2);
    CHECK(s12.coeff(NCWord{{1, 2}}).at_zero() == rational(1, 2));
    CHECK(s12.coeff(NCWord{{2, 1}}).at_zero() == rational(1, 2));
    CHECK(s12.terms().size() == 2);

    NCPoly s112 = symmetrize(x1 * x1 * x2);
    CHECK(s112.coeff(NCWord{{1, 1, 2}}).at_zero() == rational(1, 3));
    CHECK(s112.coeff(NCWord{{1, 2, 1}}).at_zero() == rational(1, 3));
    CHECK(s112.coeff(NCWord{{2, 1, 1}}).at_zero() == rational(1, 3));
    CHECK(s112.terms().size() == 3);
}

TEST_CASE("abelianize") {
    NCPoly w21 = NCPoly::word(NCWord{{2, 1}}, HSeries::one(0), 2);
    SymPoly x1x2 = SymPoly::generator(1, 2, 0) * SymPoly::generator(2, 2, 0);
    CHECK(abelianize(w21) == x1x2);

    NCPoly comm = NCPoly::word(NCWord{{1, 2}}, HSeries::one(0), 2) - w21;
    CHECK(abelianize(comm).is_zero());

    // h * (1,1) -> h x_1^2
    NCPoly h11 = NCPoly::word(NCWord{{1, 1}}, HSeries::hbar(1), 2);
    SymPoly x1sq(2, 1);
    SymMonomial m(2);
    m.exp = {2, 0};
    x1sq.add_term(m, HSeries::hbar(1));
    CHECK(abelianize(h11) == x1sq);
}

TEST_CASE("abelianize after symmetrize is the identity") {
    Rng rng(15);
    for (int t = 0; t < 50; ++t) {
        SymPoly f = rng.sympoly(3, 2, 6, 4);
        CHECK(abelianize(symmetrize(f)) == f);
    }
}

TEST_CASE("abelianize is a ring morphism") {
    Rng rng(16);
    for (int t = 0; t < 40; ++t) {
        NCPoly a = random_ncpoly(rng, 3, 2, 3, 3);
        NCPoly b = random_ncpoly(rng, 3, 2, 3, 3);
        CHECK(abelianize(a * b) == abelianize(a) * abelianize(b));
        CHECK(abelianize(a + b) == abelianize(a) + abelianize(b));
    }
    CHECK(abelianize(NCPoly::one(3, 2)) == SymPoly::one(3, 2));
}
