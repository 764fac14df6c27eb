#ifndef STARQ_COBAR_HPP
#define STARQ_COBAR_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "starq/ainfty.hpp"
#include "starq/ncpoly.hpp"

namespace starq {

// Generator x_I of the cobar algebra T(B+[1]*), indexed by a nonempty
// subset I of {1..d}. Weight |I|, cohomological degree 1 - |I|; singletons
// are identified with the generators of T(V).
struct CobarGenerator {
    IndexSet mask;
    int weight() const { return subset_size(mask); }
    int degree() const { return 1 - weight(); }
};

std::string cobar_generator_name(IndexSet mask);  // "x_{i1...ik}"

// Word in the free algebra on cobar generators; empty word is the unit.
using CobarWord = std::vector<IndexSet>;

int cobar_word_degree(const CobarWord& w);
int cobar_word_weight(const CobarWord& w);

// Noncommutative polynomial in cobar generators over Q[h]/h^{N+1}, bigraded
// by (cohomological degree, weight).
class CobarElement {
  public:
    using Terms = std::map<CobarWord, HSeries>;

    CobarElement(int dim, int trunc) : dim_(dim), trunc_(trunc) {}

    static CobarElement zero(int dim, int trunc) { return CobarElement(dim, trunc); }
    static CobarElement one(int dim, int trunc) {
        CobarElement e(dim, trunc);
        e.add_term({}, HSeries::one(trunc));
        return e;
    }
    static CobarElement generator(IndexSet mask, int dim, int trunc) {
        CobarElement e(dim, trunc);
        e.add_term({mask}, HSeries::one(trunc));
        return e;
    }

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CobarWord& w, const HSeries& c);

    CobarElement& operator+=(const CobarElement& o);
    CobarElement& operator-=(const CobarElement& o);
    CobarElement operator-() const;
    friend CobarElement operator+(CobarElement a, const CobarElement& b) { return a += b; }
    friend CobarElement operator-(CobarElement a, const CobarElement& b) { return a -= b; }
    friend CobarElement operator*(const CobarElement& a, const CobarElement& b);
    CobarElement& operator*=(const HSeries& c);
    friend CobarElement operator*(CobarElement a, const HSeries& c) { return a *= c; }
    CobarElement& operator*=(const Rational& c);
    friend CobarElement operator*(CobarElement a, const Rational& c) { return a *= c; }

    // True when every word is homogeneous of the given cohomological degree.
    bool is_homogeneous_degree(int deg) const;

    // Conversion to T(V): every generator in every word must be a singleton;
    // the empty word maps to the constant term.
    NCPoly to_ncpoly() const;

    CobarElement at_hbar_zero() const;

    friend bool operator==(const CobarElement& a, const CobarElement& b) {
        return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CobarElement& a, const CobarElement& b) {
        return !(a == b);
    }

  private:
    int dim_;
    int trunc_;
    Terms terms_;
};

// Differential of the cobar algebra, acting on generators and extended to
// words by the graded Leibniz rule
//   delta(a b) = delta(a) b + (-1)^{deg a} a delta(b).
//
// On a generator x_I the deformed differential dual to an A-infinity
// structure with stored components D^k is
//   delta(x_I) = (-1)^{|I|-1} sum_k sum_{(J_1..J_k), J_t nonempty}
//                  <x_I, D^k(J_1..J_k)> x_{J_1} (x) ... (x) x_{J_k},
// the arity-0 component pairing to a scalar. The classical differential is
// the special case dual to the wedge component alone:
//   delta_0(x_I) = (-1)^{|I|} sum_{I = J u K} (-1)^{|J|} sgn(J,K) x_J (x) x_K.
// The sign assignment is pinned by delta^2 = 0 (checked exhaustively through
// weight 4) and by the weight-2 golden relations.
class CobarDifferential {
  public:
    static CobarDifferential classical(int dim, int trunc);
    static CobarDifferential deformed(const AInftyInstance& inst);

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }

    const CobarElement& on_generator(IndexSet mask) const;
    CobarElement apply(const CobarElement& e) const;

    // True when delta(x_I) is weight-homogeneous of weight |I| for every
    // generator (classical differentials are; deformed ones in general only
    // bound weight from above).
    bool preserves_weight() const;

  private:
    CobarDifferential(int dim, int trunc) : dim_(dim), trunc_(trunc) {}

    int dim_;
    int trunc_;
    std::map<IndexSet, CobarElement> gen_images_;
};

CobarElement classical_delta(int dim, int trunc, IndexSet mask);
CobarElement deformed_delta(const AInftyInstance& inst, IndexSet mask);

// Relations delta_h(x_{ij}) = 0 presenting the quotient, as elements of
// T(V)[h], listed for i < j in lexicographic order.
std::vector<NCPoly> quotient_relations(const AInftyInstance& inst);

// First-order relation for a quadratic structure, valid modulo h^2:
//   x_i (x) x_j - x_j (x) x_i - h Sym(pi_ij),
// returned at truncation order 1.
NCPoly quadratic_first_order_relation(const PoissonBivector& pi, int i, int j);

struct DeltaSquaredViolation {
    IndexSet mask;
    CobarElement value;
};

struct DeltaSquaredReport {
    int max_weight;
    std::vector<DeltaSquaredViolation> violations;
    bool ok() const { return violations.empty(); }
};

DeltaSquaredReport check_delta_squared(const CobarDifferential& delta, int max_weight);

// One bigraded slot of the cobar complex. Dimensions are flattened ranks of
// free Q-modules: each word contributes N+1 rational coordinates.
struct CohomologySlot {
    int degree;
    int weight;     // exact weight (sliced) or weight window bound
    bool windowed;  // true: all words of weight <= weight
    int dim_flat;
    int rank_out;  // rank of delta leaving this slot
    int rank_in;   // rank of delta entering from degree-1
    int h_dim;     // dim_flat - rank_out - rank_in
};

// Exact Gaussian-elimination rank over Q.
int rational_matrix_rank(std::vector<std::vector<Rational>> m);

// Basis words of fixed degree and exact weight.
std::vector<CobarWord> cobar_words_at(int dim, int degree, int weight);

// Cohomology at one slot. For weight-preserving differentials the exact
// weight-w slice is used; otherwise the weight <= w window (a subcomplex,
// since the deformed differential never raises weight). Sizes above the
// guard are rejected.
CohomologySlot cohomology_slot(const CobarDifferential& delta, int degree, int weight);

std::vector<CohomologySlot> cohomology_table(const CobarDifferential& delta,
                                             int degree_min, int degree_max,
                                             int max_weight);

}  // namespace starq

#endif
