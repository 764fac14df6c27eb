#ifndef STARQ_NCPOLY_HPP
#define STARQ_NCPOLY_HPP

#include <map>
#include <vector>

#include "starq/sympoly.hpp"

namespace starq {

// Word in the free algebra T(V): a finite sequence of generator indices
// (1-based). The empty word is the unit.
struct NCWord {
    std::vector<int> letters;

    NCWord() = default;
    explicit NCWord(std::vector<int> ls) : letters(std::move(ls)) {}

    int degree() const { return static_cast<int>(letters.size()); }
    bool is_one() const { return letters.empty(); }

    NCWord operator*(const NCWord& o) const {
        NCWord r = *this;
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }

    bool is_sorted() const {
        for (size_t i = 1; i < letters.size(); ++i)
            if (letters[i - 1] > letters[i]) return false;
        return true;
    }

    SymMonomial abelianized(int dim) const {
        SymMonomial m(dim);
        for (int l : letters) m.exp.at(static_cast<size_t>(l - 1)) += 1;
        return m;
    }

    friend bool operator==(const NCWord& a, const NCWord& b) {
        return a.letters == b.letters;
    }
};

// Degree-lexicographic order with x_1 < ... < x_d; ties broken
// lexicographically on the letter sequence.
struct NCWordLess {
    bool operator()(const NCWord& a, const NCWord& b) const {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

// Element of T(V)[h]/h^{N+1}: finite map word -> HSeries, zero coefficients
// pruned after every operation.
class NCPoly {
  public:
    using Terms = std::map<NCWord, HSeries, NCWordLess>;

    NCPoly(int dim, int trunc) : dim_(dim), trunc_(trunc) {}

    static NCPoly zero(int dim, int trunc) { return NCPoly(dim, trunc); }
    static NCPoly constant(const Rational& c, int dim, int trunc) {
        NCPoly p(dim, trunc);
        p.add_term(NCWord{}, HSeries::constant(c, trunc));
        return p;
    }
    static NCPoly one(int dim, int trunc) { return constant(1, dim, trunc); }
    static NCPoly generator(int i, int dim, int trunc) {
        NCPoly p(dim, trunc);
        p.add_term(NCWord{{i}}, HSeries::one(trunc));
        return p;
    }
    static NCPoly word(const NCWord& w, const HSeries& c, int dim) {
        NCPoly p(dim, c.trunc_order());
        p.add_term(w, c);
        return p;
    }

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    // Leading (maximal) term under deglex; poly must be nonzero.
    const std::pair<const NCWord, HSeries>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("NCPoly: leading term of zero");
        return *terms_.rbegin();
    }

    HSeries coeff(const NCWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? HSeries(trunc_) : it->second;
    }

    void add_term(const NCWord& w, const HSeries& c) {
        for (int l : w.letters)
            if (l < 1 || l > dim_)
                throw std::invalid_argument("NCPoly: generator index out of range");
        if (c.trunc_order() != trunc_)
            throw std::invalid_argument("NCPoly: mismatched truncation orders");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        require_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        require_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPoly operator-() const {
        NCPoly r(dim_, trunc_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    // Concatenation product, extended bilinearly.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        a.require_compatible(b);
        NCPoly r(a.dim_, a.trunc_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    NCPoly& operator*=(const HSeries& c) {
        if (c.trunc_order() != trunc_)
            throw std::invalid_argument("NCPoly: mismatched truncation orders");
        NCPoly r(dim_, trunc_);
        for (const auto& [w, t] : terms_) r.add_term(w, t * c);
        return *this = r;
    }
    friend NCPoly operator*(NCPoly a, const HSeries& c) { return a *= c; }
    NCPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, t] : terms_) t *= c;
        return *this;
    }
    friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }

    NCPoly at_hbar_zero() const {
        NCPoly r(dim_, 0);
        for (const auto& [w, c] : terms_)
            r.add_term(w, HSeries::constant(c.at_zero(), 0));
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  private:
    void require_compatible(const NCPoly& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("NCPoly: dimension mismatch");
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("NCPoly: mismatched truncation orders");
    }

    int dim_;
    int trunc_;
    Terms terms_;
};

// Projection T(V) -> S(V); a ring morphism.
SymPoly abelianize(const NCPoly& t);

// Sym: S(V) -> T(V). A monomial x^a of degree n maps to the average of all
// n! permutation words of its multiset; each distinct word gets coefficient
// (prod a_i!)/n!. Satisfies abelianize(symmetrize(f)) = f.
NCPoly symmetrize(const SymPoly& f);

}  // namespace starq

#endif
