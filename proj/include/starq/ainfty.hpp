#ifndef STARQ_AINFTY_HPP
#define STARQ_AINFTY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "starq/ext.hpp"
#include "starq/poisson.hpp"

namespace starq {

// Tuple of wedge-basis inputs to a Taylor component, in the shifted space
// B[1]: entry masks are subsets of {1..d}; mask 0 is s1.
using BasisTuple = std::vector<IndexSet>;

// Arity-indexed multilinear maps d^k : B[1]^{(x)k} -> B[1], stored by their
// action on wedge-basis tuples. Missing tuples evaluate to zero. All stored
// components act in the shifted grading, where d^k has degree +1:
//   deg(output) = sum_t (|I_t| - 1) + 1.
class TaylorComponents {
  public:
    TaylorComponents(int dim, int trunc) : dim_(dim), trunc_(trunc), max_arity_(0) {}

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    int max_arity() const { return max_arity_; }

    void set(const BasisTuple& inputs, const ExtElement& value);

    // Action on a single basis tuple (zero if absent).
    ExtElement eval(const BasisTuple& inputs) const;

    std::set<int> arities_present() const;
    const std::map<BasisTuple, ExtElement>& entries() const { return entries_; }

  private:
    int dim_;
    int trunc_;
    int max_arity_;
    std::map<BasisTuple, ExtElement> entries_;
};

// A curved A-infinity structure on B = /\(V*) given by Taylor components,
// with 1 in /\^0 as the unit candidate.
class AInftyInstance {
  public:
    AInftyInstance(TaylorComponents tc, std::string label)
        : tc_(std::move(tc)), label_(std::move(label)), verified_(false) {}

    int dim() const { return tc_.dim(); }
    int trunc_order() const { return tc_.trunc_order(); }
    const std::string& label() const { return label_; }
    const TaylorComponents& components() const { return tc_; }
    TaylorComponents& components() { return tc_; }

    // d^0, an element of /\^2 (zero for flat instances).
    ExtElement curvature() const { return tc_.eval({}); }
    bool is_flat() const { return curvature().is_zero(); }

    // Set once check_stasheff has been run clean; custom instances start out
    // unverified.
    bool verified() const { return verified_; }
    void mark_verified() { verified_ = true; }

  private:
    TaylorComponents tc_;
    std::string label_;
    bool verified_;
};

// Weyl-type instance for a constant structure: d^0(1) = h pi in /\^2 and
// d^2(se_I (x) se_J) = (-1)^{|I|} sgn(I,J) se_{I u J}; nothing else.
AInftyInstance build_constant_instance(const PoissonBivector& pi);

// Chevalley-Eilenberg-type instance for a linear structure: the same d^2,
// plus d^1 given on generators by d^1(se_k) = h sum_{i<j} f_ij^k se_{ij}
// and extended to /\(V*) as an odd derivation of the wedge. Accepts any
// linear pi; d^1 squares to zero exactly when the Jacobi identity holds.
AInftyInstance build_linear_instance(const PoissonBivector& pi);

struct StasheffViolation {
    int arity;          // n of the violated relation
    BasisTuple inputs;  // basis tuple witnessing it
    ExtElement defect;  // nonzero value of the relation
};

struct StasheffReport {
    int max_arity_checked;
    std::vector<StasheffViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Evaluates, for every n <= max_n and every wedge-basis tuple of length n,
// the Stasheff relation
//   sum_{j+k+l=n} (-1)^{s(b_1..b_j)} d^{j+1+l}(b_1..b_j, d^k(b_{j+1}..b_{j+k}), ..b_n) = 0
// with s the sum of shifted degrees |I_t| - 1 over the first j inputs.
StasheffReport check_stasheff(const AInftyInstance& inst, int max_n);

struct UnitalityViolation {
    std::string what;
    BasisTuple inputs;
};

struct UnitalityReport {
    std::vector<UnitalityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Unit axioms in the shifted convention: d^2(s1, b) = b,
// d^2(b, s1) = (-1)^{|b|} b for b = se_I with |b| = |I|, and every other
// stored arity vanishes on tuples containing s1.
UnitalityReport check_unitality(const AInftyInstance& inst);

// Applies d^k linearly when some inputs are ExtElements rather than basis
// masks; used by the checkers and the cobar dual.
ExtElement eval_on_elements(const TaylorComponents& tc,
                            const std::vector<ExtElement>& inputs);

}  // namespace starq

#endif
