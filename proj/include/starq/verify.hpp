#ifndef STARQ_VERIFY_HPP
#define STARQ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "starq/io.hpp"
#include "starq/starprod.hpp"

namespace starq {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;          // what was checked / sizes
    std::string counterexample;  // replayable payload on failure
};

struct VerificationReport {
    std::string label;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    // Byte-stable across runs for a fixed seed (timing is not part of it).
    Json to_json() const;
    std::string to_text() const;
};

// Deterministic generator for randomized checks; raw splitmix64 so streams
// are identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    size_t below(size_t n);
    Rational small_rational();  // nonzero, numerator in [-9,9], denominator in [1,5]
    SymMonomial monomial(int dim, int max_degree);
    // sparse polynomial with `terms` monomials of degree <= max_degree
    SymPoly sympoly(int dim, int trunc, int max_degree, int terms);

  private:
    std::uint64_t state_;
};

// One reproducible verification run: the structure, which product and
// relation source it exercises, the bounds, the seed, and the expected
// verdict. Dispatches on the structure class.
struct VerificationCase {
    std::string label;
    PoissonBivector pi;
    std::string star_kind;        // moyal | gutt_transport | first_order
    std::string relation_source;  // deformed_delta | first_order_formula
    int degree_bound;
    int trunc;
    std::uint64_t seed;
    bool expect_pass;
};

VerificationReport run_case(const VerificationCase& c);

// The shipped structures with their standard bounds.
std::vector<VerificationCase> shipped_cases(int trunc);

// Executable checks for the constant case: exact quotient relations, PBW
// flatness of the oriented system, and multiplicativity of the transported
// symmetrization against the Moyal product (exhaustive through degree 3,
// then random pairs of degree <= degree_bound).
VerificationReport verify_constant(const PoissonBivector& pi, int degree_bound,
                                   int trunc, int trials, std::uint64_t seed = 1);

// Linear case: relations, completion with no new rules, Hilbert counts,
// associativity of the transported product, transport consistency, the
// Chevalley-Eilenberg instance axioms, and the wheel-series data.
VerificationReport verify_linear(const PoissonBivector& pi, int degree_bound,
                                 int trunc, std::uint64_t seed = 1,
                                 int assoc_trials = 100);

// Quadratic case modulo h^2: first-order relations, homogeneity, flatness
// of the completed system, and the first-order associator.
VerificationReport verify_quadratic(const PoissonBivector& pi, int degree_bound,
                                    std::uint64_t seed = 1, int assoc_trials = 100);

// Classical cobar cohomology window: H^k = 0 for k < 0 and
// dim H^0(weight w) = C(w+d-1, w), by exact rank computation.
VerificationReport verify_koszul(int dim, int max_weight);

// ---- seeded-defect suites ----------------------------------------------
//
// Each builds a corrupted object and reports whether the library catches
// it; `pass` means the defect was detected and the counterexample replayed.

VerificationReport mutation_broken_jacobi(int trunc);
VerificationReport mutation_flipped_delta_sign(int trunc);
VerificationReport mutation_corrupted_rule(int trunc);
VerificationReport mutation_perturbed_symmetrization(const PoissonBivector& pi,
                                                     int degree_bound, int trunc,
                                                     std::uint64_t seed = 7);
// Sign flip inside one Taylor component; detected by the Stasheff checker.
VerificationReport mutation_stasheff_sign(int trunc);

}  // namespace starq

#endif
