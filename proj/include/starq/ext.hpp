#ifndef STARQ_EXT_HPP
#define STARQ_EXT_HPP

#include <cstdint>
#include <map>

#include "starq/hseries.hpp"

namespace starq {

// Subset of {1..d} as a bitmask; bit (i-1) set means index i is present.
using IndexSet = std::uint32_t;

inline int subset_size(IndexSet s) { return __builtin_popcount(s); }

// Sign of sorting the concatenation (I, J) of two disjoint sorted index
// sets: (-1)^{#{(i,j) in I x J : i > j}}.
inline int shuffle_sign(IndexSet i, IndexSet j) {
    int sign = 1;
    for (IndexSet a = i; a != 0; a &= a - 1) {
        IndexSet bit = a & ~(a - 1);
        // indices of J strictly below this element of I
        int inv = __builtin_popcount(j & (bit - 1));
        if (inv & 1) sign = -sign;
    }
    return sign;
}

// Element of the exterior algebra /\(V*) with HSeries coefficients. Basis
// e_I indexed by subsets I of {1..d}; e_{} is the unit.
class ExtElement {
  public:
    using Terms = std::map<IndexSet, HSeries>;

    ExtElement(int dim, int trunc) : dim_(dim), trunc_(trunc) {}

    static ExtElement zero(int dim, int trunc) { return ExtElement(dim, trunc); }
    static ExtElement basis(IndexSet s, int dim, int trunc) {
        ExtElement e(dim, trunc);
        e.add_term(s, HSeries::one(trunc));
        return e;
    }
    static ExtElement one(int dim, int trunc) { return basis(0, dim, trunc); }

    int dim() const { return dim_; }
    int trunc_order() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous(int deg) const {
        for (const auto& [s, c] : terms_)
            if (subset_size(s) != deg) return false;
        return true;
    }

    HSeries coeff(IndexSet s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? HSeries(trunc_) : it->second;
    }

    void add_term(IndexSet s, const HSeries& c) {
        if (s >= (IndexSet{1} << dim_))
            throw std::invalid_argument("ExtElement: index set out of range");
        if (c.trunc_order() != trunc_)
            throw std::invalid_argument("ExtElement: mismatched truncation orders");
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(s, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExtElement& operator+=(const ExtElement& o) {
        require_compatible(o);
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    ExtElement& operator-=(const ExtElement& o) {
        require_compatible(o);
        for (const auto& [s, c] : o.terms_) add_term(s, -c);
        return *this;
    }
    ExtElement operator-() const {
        ExtElement r(dim_, trunc_);
        for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
        return r;
    }
    friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
    friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }

    ExtElement& operator*=(const HSeries& c) {
        if (c.trunc_order() != trunc_)
            throw std::invalid_argument("ExtElement: mismatched truncation orders");
        ExtElement r(dim_, trunc_);
        for (const auto& [s, t] : terms_) r.add_term(s, t * c);
        return *this = r;
    }
    friend ExtElement operator*(ExtElement a, const HSeries& c) { return a *= c; }
    ExtElement& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, t] : terms_) t *= c;
        return *this;
    }
    friend ExtElement operator*(ExtElement a, const Rational& c) { return a *= c; }
    friend ExtElement operator*(const Rational& c, ExtElement a) { return a *= c; }

    // Wedge product: e_I /\ e_J = shuffle_sign(I,J) e_{I u J} when disjoint,
    // zero otherwise.
    friend ExtElement wedge(const ExtElement& a, const ExtElement& b) {
        a.require_compatible(b);
        ExtElement r(a.dim_, a.trunc_);
        for (const auto& [sa, ca] : a.terms_)
            for (const auto& [sb, cb] : b.terms_) {
                if (sa & sb) continue;
                HSeries c = ca * cb;
                if (shuffle_sign(sa, sb) < 0) c = -c;
                r.add_term(sa | sb, c);
            }
        return r;
    }

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) {
        return !(a == b);
    }

  private:
    void require_compatible(const ExtElement& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("ExtElement: dimension mismatch");
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("ExtElement: mismatched truncation orders");
    }

    int dim_;
    int trunc_;
    Terms terms_;
};

}  // namespace starq

#endif
