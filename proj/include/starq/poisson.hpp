#ifndef STARQ_POISSON_HPP
#define STARQ_POISSON_HPP

#include <string>
#include <vector>

#include "starq/ncpoly.hpp"
#include "starq/sympoly.hpp"

namespace starq {

enum class PoissonClass { constant, linear, quadratic, general };

std::string to_string(PoissonClass c);

// Antisymmetric matrix of polynomials pi_ij on V*. The stored matrix is
// calibrated so that the deformed commutator relation reads
// x_i * x_j - x_j * x_i = h pi_ij; the bidifferential operator feeding the
// star products is B(f,g) = sum_{i,j} pi_ij d_i f d_j g, which satisfies
// B(x_i, x_j) = pi_ij.
class PoissonBivector {
  public:
    // Entries (i, j, pi_ij) with i < j; the lower triangle is filled by
    // antisymmetry. Omitted entries are zero.
    PoissonBivector(int dim, int trunc,
                    const std::vector<std::tuple<int, int, SymPoly>>& upper);

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    PoissonClass poisson_class() const { return class_; }

    const SymPoly& entry(int i, int j) const;

    // Entry as a rational; requires a constant entry.
    Rational constant_entry(int i, int j) const;

    // Coefficient of x_k in pi_ij (the structure constant f_ij^k for the
    // linear class).
    Rational structure_constant(int i, int j, int k) const;

    bool is_class(PoissonClass c) const;  // zero entries match every class

    // B(f,g) = sum_{i,j} pi_ij d_i f d_j g. This is the operator entering
    // the Moyal exponent and the first-order star product.
    SymPoly bidiff(const SymPoly& f, const SymPoly& g) const;

    // The bracket operation, summing over ordered pairs both ways:
    // pi(f,g) = sum_{i,j} pi_ij (d_i f d_j g - d_j f d_i g) = 2 B(f,g).
    // On generators pi(x_i, x_j) = pi_ij - pi_ji.
    SymPoly bracket(const SymPoly& f, const SymPoly& g) const;

    // Jacobiator component
    //   sum_l (pi_il d_l pi_jk + pi_jl d_l pi_ki + pi_kl d_l pi_ij);
    // pi is Poisson iff all components vanish.
    SymPoly jacobi_defect(int i, int j, int k) const;

    bool is_poisson() const;

    // First witness (i,j,k) with nonzero defect, or empty.
    std::vector<int> jacobi_witness() const;

  private:
    void check_range(int i) const;

    int dim_;
    int trunc_;
    std::vector<SymPoly> entries_;  // row-major d x d
    PoissonClass class_;
};

SymPoly poisson_bracket(const PoissonBivector& pi, const SymPoly& f,
                        const SymPoly& g);

// Shipped example structures.
namespace examples {

// Standard symplectic constant structure: pi_{2k-1,2k} = 1 (dim even).
PoissonBivector weyl(int dim, int trunc);
// Constant structure with all upper entries distinct nonzero rationals.
PoissonBivector constant_filled(int dim, int trunc);
// Heisenberg Lie algebra: [x1,x2] = x3.
PoissonBivector heisenberg(int trunc);
// Cyclic structure constants f_12^3 = f_23^1 = f_31^2 = 1.
PoissonBivector sl2(int trunc);
// Two-dimensional solvable algebra: [x1,x2] = x1.
PoissonBivector solvable2(int trunc);
// Quantum plane: pi_12 = x1 x2.
PoissonBivector quantum_plane(int trunc);
// Quadratic structure pi_12 = x1^2.
PoissonBivector quadratic_x1sq(int trunc);

}  // namespace examples

}  // namespace starq

#endif
