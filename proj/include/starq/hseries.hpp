#ifndef STARQ_HSERIES_HPP
#define STARQ_HSERIES_HPP

#include <vector>

#include "starq/rational.hpp"

namespace starq {

// Truncated formal power series in h over Q: the ring Q[h]/h^{N+1}.
//
// Every deformed object in the engine has its scalars here. The truncation
// order N is fixed per session; mixing values of different truncation orders
// in one operation is a usage error, not a coercion.
class HSeries {
  public:
    explicit HSeries(int trunc_order)
        : coeffs_(static_cast<size_t>(check_order(trunc_order)) + 1) {}

    static HSeries constant(const Rational& c, int trunc_order) {
        HSeries s(trunc_order);
        s.coeffs_[0] = c;
        return s;
    }
    static HSeries one(int trunc_order) { return constant(1, trunc_order); }
    // c * h^power (zero when power exceeds the truncation order).
    static HSeries hbar(int trunc_order, int power = 1, const Rational& c = 1) {
        HSeries s(trunc_order);
        if (power < 0) throw std::invalid_argument("HSeries: negative h power");
        if (power <= trunc_order) s.coeffs_[static_cast<size_t>(power)] = c;
        return s;
    }

    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, const Rational& v) { coeffs_.at(static_cast<size_t>(k)) = v; }

    // Constant term; the image under h -> 0.
    const Rational& at_zero() const { return coeffs_[0]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    // Units of Q[h]/h^{N+1} are exactly the series with nonzero constant term.
    bool is_unit() const { return coeffs_[0] != 0; }

    HSeries& operator+=(const HSeries& o) {
        require_same_order(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    HSeries& operator-=(const HSeries& o) {
        require_same_order(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    HSeries operator-() const {
        HSeries r(trunc_order());
        for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
        return r;
    }
    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }

    // Cauchy product with terms of order > N discarded.
    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        a.require_same_order(b);
        HSeries r(a.trunc_order());
        const size_t n = a.coeffs_.size();
        for (size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j + i < n; ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    HSeries& operator*=(const HSeries& o) { return *this = *this * o; }

    HSeries& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    friend HSeries operator*(HSeries a, const Rational& c) { return a *= c; }
    friend HSeries operator*(const Rational& c, HSeries a) { return a *= c; }

    HSeries& operator/=(const Rational& c) {
        if (c == 0) throw std::invalid_argument("HSeries: division by zero scalar");
        for (auto& x : coeffs_) x /= c;
        return *this;
    }

    // Multiplicative inverse; requires a unit (nonzero constant term).
    HSeries inverse() const {
        if (!is_unit())
            throw std::domain_error("HSeries: not a unit in Q[h]/h^(N+1)");
        HSeries r(trunc_order());
        r.coeffs_[0] = 1 / coeffs_[0];
        for (size_t k = 1; k < coeffs_.size(); ++k) {
            Rational acc = 0;
            for (size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = -acc / coeffs_[0];
        }
        return r;
    }

    // Multiplication by h^m (shifts coefficients, drops overflow).
    HSeries shifted(int m) const {
        HSeries r(trunc_order());
        for (size_t k = 0; k + static_cast<size_t>(m) < coeffs_.size(); ++k)
            r.coeffs_[k + static_cast<size_t>(m)] = coeffs_[k];
        return r;
    }

    // Re-truncation to a different session order. Deliberately explicit:
    // binary operations never coerce.
    HSeries retruncated(int new_order) const {
        HSeries r(new_order);
        for (size_t k = 0; k < r.coeffs_.size() && k < coeffs_.size(); ++k)
            r.coeffs_[k] = coeffs_[k];
        return r;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

  private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("HSeries: negative truncation order");
        return n;
    }
    void require_same_order(const HSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("HSeries: mismatched truncation orders");
    }

    std::vector<Rational> coeffs_;  // c_0 .. c_N
};

}  // namespace starq

#endif
