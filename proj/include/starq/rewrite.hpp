#ifndef STARQ_REWRITE_HPP
#define STARQ_REWRITE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "starq/ncpoly.hpp"

namespace starq {

// Oriented rule lhs -> rhs with lhs a word, monic, and every word of rhs
// strictly below lhs in the deglex order.
struct RewriteRule {
    NCWord lhs;
    NCPoly rhs;
};

enum class SystemStatus { raw, completed, nonconfluent };

std::string to_string(SystemStatus s);

// Presentation of T(V)[h]/I by rewriting rules under the deglex order with
// x_1 < ... < x_d. Normal forms and the irreducible-word basis are certified
// only up to the degree bound.
class RewriteSystem {
  public:
    // Orients the relations. Each relation is first reduced by the rules
    // already collected (so duplicate leading words cannot arise); a
    // relation whose leading coefficient is not a unit of Q[h]/h^{N+1}
    // cannot be oriented and raises an error.
    static RewriteSystem build(int dim, int trunc,
                               const std::vector<NCPoly>& relations,
                               int degree_bound);

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    int degree_bound() const { return degree_bound_; }
    SystemStatus status() const { return status_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::string& witness() const { return witness_; }

    bool is_irreducible(const NCWord& w) const;

    // Unique irreducible representative. Requires a completed system and
    // deg <= degree bound. Linear over Q[h]/h^{N+1}; idempotent. Results are
    // memoized per word.
    NCPoly normal_form(const NCPoly& p) const;

    // Reduction with randomized strategy choices; bypasses the memo. Used to
    // exercise confluence: on a completed system every seed must agree.
    NCPoly normal_form_random(const NCPoly& p, std::uint64_t seed) const;

    // Irreducible-word counts per degree 0..degree_bound. For a flat
    // deformation these equal dim S^n(V) = C(n+d-1, n).
    std::vector<long> hilbert() const;

    friend RewriteSystem complete(RewriteSystem sys, int rule_budget);

  private:
    RewriteSystem(int dim, int trunc, int degree_bound)
        : dim_(dim), trunc_(trunc), degree_bound_(degree_bound),
          status_(SystemStatus::raw) {}

    // first match (leftmost position, then lowest rule index); reduction of
    // w by rule r at position p replaces w = u lhs v with u rhs v.
    std::optional<std::pair<size_t, size_t>> find_reduction(const NCWord& w) const;
    std::vector<std::pair<size_t, size_t>> all_reductions(const NCWord& w) const;
    NCPoly apply_rule(const NCWord& w, size_t rule, size_t pos) const;

    // plain reduction loop without memo; safe while rules mutate
    NCPoly reduce_uncached(const NCPoly& p) const;

    void add_oriented(const NCPoly& reduced_relation);

    int dim_;
    int trunc_;
    int degree_bound_;
    SystemStatus status_;
    std::vector<RewriteRule> rules_;
    std::string witness_;

    struct WordHash {
        size_t operator()(const std::vector<int>& v) const {
            size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    // memo for completed systems; invalidated when rules change
    mutable std::unordered_map<std::vector<int>, NCPoly, WordHash> nf_cache_;
};

// Resolves all overlap and inclusion ambiguities of degree <= degree_bound,
// adding rules from nonzero S-polynomial remainders. Ends completed, or
// nonconfluent (with witness) when a remainder cannot be oriented over the
// truncated ring. Exceeding the rule budget raises an error.
RewriteSystem complete(RewriteSystem sys, int rule_budget = 256);

}  // namespace starq

#endif
