#ifndef STARQ_STARPROD_HPP
#define STARQ_STARPROD_HPP

#include <optional>

#include "starq/poisson.hpp"
#include "starq/rewrite.hpp"

namespace starq {

// Moyal product for a constant structure:
//   f * g = sum_{k<=N} (h^k / 2^k k!) m(B^k(f (x) g)),
// B the calibrated bidifferential operator of the bivector. Associative at
// every truncation; x_i * x_j - x_j * x_i = h pi_ij.
SymPoly moyal_star(const SymPoly& f, const SymPoly& g, const PoissonBivector& pi);

// Universal first-order product f g + (h/2) B(f,g) for any polynomial
// structure; associative modulo h^2 when pi is Poisson.
SymPoly first_order_star(const SymPoly& f, const SymPoly& g,
                         const PoissonBivector& pi);

// Phi = normal_form . symmetrize for a completed commutator-type system,
// with its triangular inverse. NF(Sym(x^a)) is the sorted word of x^a plus
// lower-degree corrections, so Phi is unitriangular by degree and the
// inverse is a degree-by-degree solve. Computed by the recursion
//   Sym(x^a) = (1/n) sum_i a_i x_i Sym(x^{a-e_i})
// pushed through the normal form, memoized per monomial.
class PBWTransport {
  public:
    explicit PBWTransport(RewriteSystem sys);

    const RewriteSystem& system() const { return sys_; }

    NCPoly phi(const SymPoly& f) const;
    const NCPoly& phi_monomial(const SymMonomial& m) const;
    SymPoly phi_inverse(const NCPoly& p) const;

  private:
    RewriteSystem sys_;
    mutable std::map<SymMonomial, NCPoly, SymMonomialLess> phi_cache_;
};

// Transported product for a linear structure: f * g = Phi^{-1}(NF(Phi(f) Phi(g)))
// over the completed commutator system of the structure constants.
class GuttProduct {
  public:
    GuttProduct(const PoissonBivector& pi, int degree_bound);

    const RewriteSystem& system() const { return transport_.system(); }
    const PBWTransport& transport() const { return transport_; }
    int dim() const { return pi_.dim(); }
    int trunc_order() const { return pi_.trunc_order(); }

    NCPoly phi(const SymPoly& f) const { return transport_.phi(f); }
    SymPoly phi_inverse(const NCPoly& p) const { return transport_.phi_inverse(p); }
    SymPoly star(const SymPoly& f, const SymPoly& g) const;

  private:
    PoissonBivector pi_;
    PBWTransport transport_;
};

// Constant-coefficient differential operator: multi-index -> coefficient.
using DiffOperator = std::map<SymMonomial, Rational, SymMonomialLess>;

SymPoly apply_diff_operator(const DiffOperator& op, const SymPoly& f);

// c_n = tr(ad^n) contracted onto partials: for every ordered tuple
// (i_1..i_n), tr(ad_{x_{i_1}} ... ad_{x_{i_n}}) d_{i_1}...d_{i_n}, with
// (ad x_i)_{mk} = f_ik^m. Lowers polynomial degree by n.
DiffOperator trace_power_operator(const PoissonBivector& pi, int n);

// Coefficients b_n of (1/2) log(sinh(t/2)/(t/2)) up to t^max_order; these
// are the even-wheel weights (b_2 = 1/48, b_4 = -1/5760, odd ones zero).
std::vector<Rational> modified_bernoulli_coeffs(int max_order);

// Wheel data for the strange automorphism exp(w_1 h c_1 + sum b_{2n} h^{2n} c_{2n}).
struct DufloSeries {
    int trunc;
    Rational one_wheel;                   // -1/4
    std::vector<Rational> even_wheels;    // index n: coefficient b_n (odd entries zero)
    std::vector<DiffOperator> operators;  // index n: c_n for n = 0..trunc
};

DufloSeries duflo_series(const PoissonBivector& pi, int trunc);

SymPoly duflo_apply(const DufloSeries& d, const SymPoly& f);

// Star product selected by the class of the structure: Moyal for constant,
// transported for linear, first-order (meaningful mod h^2) for quadratic.
class StarAlgebra {
  public:
    enum class Kind { moyal, gutt_transport, first_order };

    static StarAlgebra make(const PoissonBivector& pi, int degree_bound);

    Kind kind() const { return kind_; }
    const PoissonBivector& bivector() const { return pi_; }
    SymPoly star(const SymPoly& f, const SymPoly& g) const;

  private:
    StarAlgebra(Kind k, PoissonBivector pi) : kind_(k), pi_(std::move(pi)) {}

    Kind kind_;
    PoissonBivector pi_;
    std::optional<GuttProduct> gutt_;
};

}  // namespace starq

#endif
