#include "starq/starprod.hpp"

#include <algorithm>

#include "starq/cobar.hpp"

namespace starq {

namespace {

SymPoly multi_derivative(const SymPoly& f, const SymMonomial& alpha) {
    SymPoly r = f;
    for (int i = 1; i <= f.dim(); ++i)
        for (int k = 0; k < alpha.exp[static_cast<size_t>(i - 1)]; ++k)
            r = r.derivative(i);
    return r;
}

}  // namespace

SymPoly moyal_star(const SymPoly& f, const SymPoly& g, const PoissonBivector& pi) {
    if (!pi.is_class(PoissonClass::constant))
        throw std::invalid_argument("moyal_star: structure is not constant");
    if (f.dim() != pi.dim() || g.dim() != pi.dim())
        throw std::invalid_argument("moyal_star: dimension mismatch");
    const int d = pi.dim();
    const int n = pi.trunc_order();

    // nonzero entries of the matrix, both orientations
    std::vector<std::tuple<int, int, Rational>> entries;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            if (i == j) continue;
            Rational c = pi.constant_entry(i, j);
            if (c != 0) entries.emplace_back(i, j, c);
        }

    const int kmax = std::min({n, f.degree() < 0 ? 0 : f.degree(),
                               g.degree() < 0 ? 0 : g.degree()});
    SymPoly result = f * g;
    // B^k(f (x) g) collected by derivative multisets
    std::map<std::pair<SymMonomial, SymMonomial>, Rational> tensors;
    tensors.emplace(std::make_pair(SymMonomial(d), SymMonomial(d)), Rational(1));
    Rational prefactor = 1;
    for (int k = 1; k <= kmax; ++k) {
        std::map<std::pair<SymMonomial, SymMonomial>, Rational> next;
        for (const auto& [ab, c] : tensors)
            for (const auto& [i, j, pij] : entries) {
                auto key = ab;
                key.first.exp[static_cast<size_t>(i - 1)] += 1;
                key.second.exp[static_cast<size_t>(j - 1)] += 1;
                next[key] += c * pij;
            }
        tensors = std::move(next);
        prefactor /= Rational(2 * k);  // h^k / (2^k k!)
        SymPoly level(d, n);
        for (const auto& [ab, c] : tensors) {
            if (c == 0) continue;
            SymPoly da = multi_derivative(f, ab.first);
            if (da.is_zero()) continue;
            SymPoly db = multi_derivative(g, ab.second);
            if (db.is_zero()) continue;
            level += da * db * c;
        }
        result += level * HSeries::hbar(n, k, prefactor);
    }
    return result;
}

SymPoly first_order_star(const SymPoly& f, const SymPoly& g,
                         const PoissonBivector& pi) {
    const int n = pi.trunc_order();
    return f * g + pi.bidiff(f, g) * HSeries::hbar(n, 1, rational(1, 2));
}

PBWTransport::PBWTransport(RewriteSystem sys) : sys_(std::move(sys)) {
    if (sys_.status() != SystemStatus::completed)
        throw std::invalid_argument("PBWTransport: system is not completed");
}

const NCPoly& PBWTransport::phi_monomial(const SymMonomial& m) const {
    auto it = phi_cache_.find(m);
    if (it != phi_cache_.end()) return it->second;
    const int d = sys_.dim();
    const int n = sys_.trunc_order();
    NCPoly value(d, n);
    const int deg = m.degree();
    if (deg == 0) {
        value = NCPoly::one(d, n);
    } else {
        for (int i = 1; i <= d; ++i) {
            int e = m.exp[static_cast<size_t>(i - 1)];
            if (e == 0) continue;
            SymMonomial sub = m;
            sub.exp[static_cast<size_t>(i - 1)] -= 1;
            NCPoly shifted = NCPoly::generator(i, d, n) * phi_monomial(sub);
            value += sys_.normal_form(shifted) * rational(e, deg);
        }
    }
    return phi_cache_.emplace(m, std::move(value)).first->second;
}

NCPoly PBWTransport::phi(const SymPoly& f) const {
    NCPoly r(sys_.dim(), sys_.trunc_order());
    for (const auto& [m, c] : f.terms()) r += phi_monomial(m) * c;
    return r;
}

SymPoly PBWTransport::phi_inverse(const NCPoly& p) const {
    const int d = sys_.dim();
    const int n = sys_.trunc_order();
    SymPoly result(d, n);
    NCPoly work = p;
    while (!work.is_zero()) {
        const auto& [w, c] = work.leading_term();
        if (!w.is_sorted())
            throw std::domain_error(
                "phi_inverse: element is not supported on the PBW basis");
        SymMonomial m = w.abelianized(d);
        result.add_term(m, c);
        work -= phi_monomial(m) * c;
    }
    return result;
}

namespace {

RewriteSystem linear_commutator_system(const PoissonBivector& pi, int degree_bound) {
    if (!pi.is_poisson())
        throw std::invalid_argument("GuttProduct: structure does not satisfy Jacobi");
    return complete(RewriteSystem::build(
        pi.dim(), pi.trunc_order(),
        quotient_relations(build_linear_instance(pi)), degree_bound));
}

}  // namespace

GuttProduct::GuttProduct(const PoissonBivector& pi, int degree_bound)
    : pi_(pi), transport_(linear_commutator_system(pi, degree_bound)) {}

SymPoly GuttProduct::star(const SymPoly& f, const SymPoly& g) const {
    NCPoly prod = system().normal_form(phi(f) * phi(g));
    return phi_inverse(prod);
}

SymPoly apply_diff_operator(const DiffOperator& op, const SymPoly& f) {
    SymPoly r(f.dim(), f.trunc_order());
    for (const auto& [alpha, c] : op) {
        if (c == 0) continue;
        r += multi_derivative(f, alpha) * c;
    }
    return r;
}

DiffOperator trace_power_operator(const PoissonBivector& pi, int n) {
    if (!pi.is_class(PoissonClass::linear))
        throw std::invalid_argument("trace_power_operator: structure is not linear");
    if (n < 1) throw std::invalid_argument("trace_power_operator: order must be >= 1");
    const int d = pi.dim();
    // ad matrices: (ad x_i)_{mk} = f_ik^m
    std::vector<std::vector<std::vector<Rational>>> ad(
        static_cast<size_t>(d),
        std::vector<std::vector<Rational>>(static_cast<size_t>(d),
                                           std::vector<Rational>(static_cast<size_t>(d), 0)));
    for (int i = 1; i <= d; ++i)
        for (int k = 1; k <= d; ++k)
            for (int m = 1; m <= d; ++m)
                ad[static_cast<size_t>(i - 1)][static_cast<size_t>(m - 1)]
                  [static_cast<size_t>(k - 1)] = pi.structure_constant(i, k, m);

    DiffOperator op;
    std::vector<int> tuple(static_cast<size_t>(n), 1);
    while (true) {
        // trace of ad_{tuple[0]} ... ad_{tuple[n-1]}
        std::vector<std::vector<Rational>> prod = ad[static_cast<size_t>(tuple[0] - 1)];
        for (size_t t = 1; t < tuple.size(); ++t) {
            const auto& m2 = ad[static_cast<size_t>(tuple[t] - 1)];
            std::vector<std::vector<Rational>> next(
                static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d), 0));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    for (int s = 0; s < d; ++s)
                        next[static_cast<size_t>(r)][static_cast<size_t>(c)] +=
                            prod[static_cast<size_t>(r)][static_cast<size_t>(s)] *
                            m2[static_cast<size_t>(s)][static_cast<size_t>(c)];
            prod = std::move(next);
        }
        Rational tr = 0;
        for (int r = 0; r < d; ++r) tr += prod[static_cast<size_t>(r)][static_cast<size_t>(r)];
        if (tr != 0) {
            SymMonomial alpha(d);
            for (int idx : tuple) alpha.exp[static_cast<size_t>(idx - 1)] += 1;
            op[alpha] += tr;
        }
        // next tuple
        int pos = n - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == d) {
            tuple[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        tuple[static_cast<size_t>(pos)] += 1;
    }
    // prune explicit zeros
    for (auto it = op.begin(); it != op.end();)
        it = (it->second == 0) ? op.erase(it) : std::next(it);
    return op;
}

std::vector<Rational> modified_bernoulli_coeffs(int max_order) {
    const size_t n = static_cast<size_t>(max_order) + 1;
    // sinh(t/2)/(t/2) = sum_k t^{2k} / (4^k (2k+1)!)
    std::vector<Rational> u(n, 0);
    Rational denom = 1;  // 4^k (2k+1)!
    for (size_t k = 0; 2 * k < n; ++k) {
        if (k > 0) denom *= Rational(4) * Rational(2 * static_cast<long>(k)) *
                            Rational(2 * static_cast<long>(k) + 1);
        u[2 * k] = 1 / denom;
    }
    u[0] = 0;  // u = sinh(t/2)/(t/2) - 1
    // log(1 + u) = sum_m (-1)^{m+1} u^m / m, truncated
    std::vector<Rational> log_series(n, 0);
    std::vector<Rational> power(n, 0);
    power[0] = 1;  // u^0
    auto mul_trunc = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; i + j < n; ++j) {
                if (b[j] == 0) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    };
    for (long m = 1; 2 * m < static_cast<long>(n); ++m) {
        power = mul_trunc(power, u);
        Rational sign = (m % 2 == 1) ? 1 : -1;
        for (size_t i = 0; i < n; ++i) log_series[i] += sign * power[i] / Rational(m);
    }
    for (auto& c : log_series) c /= 2;
    return log_series;
}

DufloSeries duflo_series(const PoissonBivector& pi, int trunc) {
    DufloSeries d;
    d.trunc = trunc;
    d.one_wheel = rational(-1, 4);
    d.even_wheels = modified_bernoulli_coeffs(trunc);
    d.operators.resize(static_cast<size_t>(trunc) + 1);
    for (int n = 1; n <= trunc; ++n)
        if (n == 1 || n % 2 == 0)
            d.operators[static_cast<size_t>(n)] = trace_power_operator(pi, n);
    return d;
}

SymPoly duflo_apply(const DufloSeries& d, const SymPoly& f) {
    const int n = f.trunc_order();
    auto exponent = [&](const SymPoly& p) {
        SymPoly r(p.dim(), n);
        if (1 <= d.trunc)
            r += apply_diff_operator(d.operators[1], p) * HSeries::hbar(n, 1, d.one_wheel);
        for (int m = 2; m <= d.trunc; m += 2) {
            if (d.even_wheels[static_cast<size_t>(m)] == 0) continue;
            r += apply_diff_operator(d.operators[static_cast<size_t>(m)], p) *
                 HSeries::hbar(n, m, d.even_wheels[static_cast<size_t>(m)]);
        }
        return r;
    };
    SymPoly result = f;
    SymPoly term = f;
    for (long k = 1;; ++k) {
        term = exponent(term);
        term *= Rational(1) / Rational(k);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

StarAlgebra StarAlgebra::make(const PoissonBivector& pi, int degree_bound) {
    if (pi.is_class(PoissonClass::constant)) {
        return StarAlgebra(Kind::moyal, pi);
    }
    if (pi.is_class(PoissonClass::linear)) {
        StarAlgebra a(Kind::gutt_transport, pi);
        a.gutt_.emplace(pi, degree_bound);
        return a;
    }
    if (pi.is_class(PoissonClass::quadratic)) {
        return StarAlgebra(Kind::first_order, pi);
    }
    throw std::invalid_argument(
        "StarAlgebra: no star product shipped for a general-class structure");
}

SymPoly StarAlgebra::star(const SymPoly& f, const SymPoly& g) const {
    switch (kind_) {
        case Kind::moyal: return moyal_star(f, g, pi_);
        case Kind::gutt_transport: return gutt_->star(f, g);
        case Kind::first_order: return first_order_star(f, g, pi_);
    }
    throw std::logic_error("StarAlgebra: bad kind");
}

}  // namespace starq
