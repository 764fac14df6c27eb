#ifndef STARQ_SYMPOLY_HPP
#define STARQ_SYMPOLY_HPP

#include <map>
#include <vector>

#include "starq/hseries.hpp"

namespace starq {

// Commutative monomial in generators x_1..x_d, stored as an exponent vector.
struct SymMonomial {
    std::vector<int> exp;

    explicit SymMonomial(int dim = 0) : exp(static_cast<size_t>(dim), 0) {}
    static SymMonomial generator(int dim, int i) {
        SymMonomial m(dim);
        m.exp.at(static_cast<size_t>(i - 1)) = 1;
        return m;
    }

    int dim() const { return static_cast<int>(exp.size()); }
    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    bool is_one() const { return degree() == 0; }

    SymMonomial operator*(const SymMonomial& o) const {
        SymMonomial r = *this;
        for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    friend bool operator==(const SymMonomial& a, const SymMonomial& b) {
        return a.exp == b.exp;
    }
    // deglex, matching SymMonomialLess
    friend bool operator<(const SymMonomial& a, const SymMonomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

// Degree first, then lexicographic on exponent vectors.
struct SymMonomialLess {
    bool operator()(const SymMonomial& a, const SymMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

// Element of S(V) with coefficients in Q[h]/h^{N+1}. Canonical form: no
// stored zero coefficients, so equality is structural.
class SymPoly {
  public:
    using Terms = std::map<SymMonomial, HSeries, SymMonomialLess>;

    SymPoly(int dim, int trunc) : dim_(dim), trunc_(trunc) {}

    static SymPoly zero(int dim, int trunc) { return SymPoly(dim, trunc); }
    static SymPoly constant(const Rational& c, int dim, int trunc) {
        SymPoly p(dim, trunc);
        p.add_term(SymMonomial(dim), HSeries::constant(c, trunc));
        return p;
    }
    static SymPoly one(int dim, int trunc) { return constant(1, dim, trunc); }
    static SymPoly generator(int i, int dim, int trunc) {
        SymPoly p(dim, trunc);
        p.add_term(SymMonomial::generator(dim, i), HSeries::one(trunc));
        return p;
    }
    static SymPoly monomial(const SymMonomial& m, const HSeries& c, int dim) {
        SymPoly p(dim, c.trunc_order());
        p.add_term(m, c);
        return p;
    }

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {  // degree of 0 reported as -1
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    bool is_homogeneous(int deg) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != deg) return false;
        return true;
    }

    HSeries coeff(const SymMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? HSeries(trunc_) : it->second;
    }

    void add_term(const SymMonomial& m, const HSeries& c) {
        if (static_cast<int>(m.exp.size()) != dim_)
            throw std::invalid_argument("SymPoly: monomial dimension mismatch");
        if (c.trunc_order() != trunc_)
            throw std::invalid_argument("SymPoly: mismatched truncation orders");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymPoly& operator+=(const SymPoly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SymPoly operator-() const {
        SymPoly r(dim_, trunc_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }

    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        a.require_compatible(b);
        SymPoly r(a.dim_, a.trunc_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

    SymPoly& operator*=(const HSeries& c) {
        if (c.trunc_order() != trunc_)
            throw std::invalid_argument("SymPoly: mismatched truncation orders");
        SymPoly r(dim_, trunc_);
        for (const auto& [m, t] : terms_) r.add_term(m, t * c);
        return *this = r;
    }
    friend SymPoly operator*(SymPoly a, const HSeries& c) { return a *= c; }
    SymPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, t] : terms_) t *= c;
        return *this;
    }
    friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
    friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }

    // Partial derivative with respect to x_i (1-based).
    SymPoly derivative(int i) const {
        SymPoly r(dim_, trunc_);
        const size_t idx = static_cast<size_t>(i - 1);
        for (const auto& [m, c] : terms_) {
            if (m.exp[idx] == 0) continue;
            SymMonomial n = m;
            n.exp[idx] -= 1;
            r.add_term(n, c * Rational(m.exp[idx]));
        }
        return r;
    }

    // Image under h -> 0, as a polynomial over Q (truncation order 0).
    SymPoly at_hbar_zero() const {
        SymPoly r(dim_, 0);
        for (const auto& [m, c] : terms_)
            r.add_term(m, HSeries::constant(c.at_zero(), 0));
        return r;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  private:
    void require_compatible(const SymPoly& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("SymPoly: dimension mismatch");
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("SymPoly: mismatched truncation orders");
    }

    int dim_;
    int trunc_;
    Terms terms_;
};

}  // namespace starq

#endif
