#include "starq/ainfty.hpp"

#include <cmath>
#include <functional>

namespace starq {

void TaylorComponents::set(const BasisTuple& inputs, const ExtElement& value) {
    for (IndexSet s : inputs)
        if (s >= (IndexSet{1} << dim_))
            throw std::invalid_argument("TaylorComponents: input mask out of range");
    if (value.dim() != dim_ || value.trunc_order() != trunc_)
        throw std::invalid_argument("TaylorComponents: value dimension/truncation mismatch");
    // intrinsic degree +1 in the shifted grading
    int in_degree = 0;
    for (IndexSet s : inputs) in_degree += subset_size(s) - 1;
    for (const auto& [mask, c] : value.terms())
        if (subset_size(mask) - 1 != in_degree + 1)
            throw std::invalid_argument(
                "TaylorComponents: component output is not of shifted degree +1");
    if (value.is_zero()) {
        entries_.erase(inputs);
        return;
    }
    entries_.insert_or_assign(inputs, value);
    max_arity_ = std::max(max_arity_, static_cast<int>(inputs.size()));
}

ExtElement TaylorComponents::eval(const BasisTuple& inputs) const {
    auto it = entries_.find(inputs);
    return it == entries_.end() ? ExtElement::zero(dim_, trunc_) : it->second;
}

std::set<int> TaylorComponents::arities_present() const {
    std::set<int> r;
    for (const auto& [tuple, value] : entries_) r.insert(static_cast<int>(tuple.size()));
    return r;
}

namespace {

// d^2(se_I (x) se_J) = (-1)^{|I|} sgn(I,J) se_{I u J}. The sign is the one
// forced by the unit axiom d^2(s1,b) = b, d^2(b,s1) = (-1)^{|b|} b together
// with the Stasheff relations for the wedge.
void fill_wedge_component(TaylorComponents& tc) {
    const int d = tc.dim();
    const int n = tc.trunc_order();
    const IndexSet full = (IndexSet{1} << d);
    for (IndexSet a = 0; a < full; ++a)
        for (IndexSet b = 0; b < full; ++b) {
            if (a & b) continue;
            int sign = shuffle_sign(a, b);
            if (subset_size(a) % 2 != 0) sign = -sign;
            ExtElement v(d, n);
            v.add_term(a | b, HSeries::constant(sign, n));
            tc.set({a, b}, v);
        }
}

}  // namespace

AInftyInstance build_constant_instance(const PoissonBivector& pi) {
    if (!pi.is_class(PoissonClass::constant))
        throw std::invalid_argument("build_constant_instance: structure is not constant");
    const int d = pi.dim();
    const int n = pi.trunc_order();
    TaylorComponents tc(d, n);
    fill_wedge_component(tc);
    ExtElement curv(d, n);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            Rational c = pi.constant_entry(i, j);
            if (c == 0) continue;
            IndexSet mask = (IndexSet{1} << (i - 1)) | (IndexSet{1} << (j - 1));
            curv.add_term(mask, HSeries::hbar(n, 1, c));
        }
    tc.set({}, curv);
    return AInftyInstance(std::move(tc), "constant");
}

AInftyInstance build_linear_instance(const PoissonBivector& pi) {
    if (!pi.is_class(PoissonClass::linear))
        throw std::invalid_argument("build_linear_instance: structure is not linear");
    const int d = pi.dim();
    const int n = pi.trunc_order();
    TaylorComponents tc(d, n);
    fill_wedge_component(tc);

    // d^1 on generators: se_k -> h sum_{i<j} f_ij^k se_{ij}.
    std::vector<ExtElement> d1(static_cast<size_t>(d), ExtElement::zero(d, n));
    for (int k = 1; k <= d; ++k) {
        ExtElement v(d, n);
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) {
                Rational f = pi.structure_constant(i, j, k);
                if (f == 0) continue;
                IndexSet mask = (IndexSet{1} << (i - 1)) | (IndexSet{1} << (j - 1));
                v.add_term(mask, HSeries::hbar(n, 1, f));
            }
        d1[static_cast<size_t>(k - 1)] = v;
    }

    // Odd-derivation extension over the wedge basis.
    const IndexSet full = (IndexSet{1} << d);
    for (IndexSet s = 1; s < full; ++s) {
        ExtElement out(d, n);
        int pos = 0;
        for (int k = 1; k <= d; ++k) {
            if (!(s & (IndexSet{1} << (k - 1)))) continue;
            IndexSet before = s & ((IndexSet{1} << (k - 1)) - 1);
            IndexSet after = s & ~((IndexSet{1} << k) - 1);
            ExtElement piece = wedge(ExtElement::basis(before, d, n),
                                     wedge(d1[static_cast<size_t>(k - 1)],
                                           ExtElement::basis(after, d, n)));
            if (pos % 2 != 0) piece = -piece;
            out += piece;
            ++pos;
        }
        tc.set({s}, out);
    }
    return AInftyInstance(std::move(tc), "linear");
}

ExtElement eval_on_elements(const TaylorComponents& tc,
                            const std::vector<ExtElement>& inputs) {
    const int d = tc.dim();
    const int n = tc.trunc_order();
    ExtElement acc = ExtElement::zero(d, n);
    // expand multilinearly over the basis support of each input
    BasisTuple tuple(inputs.size(), 0);
    HSeries coeff = HSeries::one(n);
    std::function<void(size_t, const HSeries&)> rec = [&](size_t slot,
                                                          const HSeries& c) {
        if (slot == inputs.size()) {
            acc += tc.eval(tuple) * c;
            return;
        }
        for (const auto& [mask, w] : inputs[slot].terms()) {
            tuple[slot] = mask;
            rec(slot + 1, c * w);
        }
    };
    rec(0, coeff);
    return acc;
}

namespace {

int shifted_degree_sum(const BasisTuple& tuple, size_t count) {
    int s = 0;
    for (size_t t = 0; t < count; ++t) s += subset_size(tuple[t]) - 1;
    return s;
}

// One Stasheff relation evaluated on a basis tuple.
ExtElement stasheff_defect(const TaylorComponents& tc, const BasisTuple& tuple) {
    const int d = tc.dim();
    const int n = tc.trunc_order();
    const int arity = static_cast<int>(tuple.size());
    ExtElement acc = ExtElement::zero(d, n);
    for (int k = 0; k <= arity; ++k) {
        for (int j = 0; j + k <= arity; ++j) {
            BasisTuple inner(tuple.begin() + j, tuple.begin() + j + k);
            ExtElement mid = tc.eval(inner);
            if (mid.is_zero()) continue;
            int sign = (shifted_degree_sum(tuple, static_cast<size_t>(j)) % 2 != 0) ? -1 : 1;
            for (const auto& [mask, c] : mid.terms()) {
                BasisTuple outer;
                outer.reserve(static_cast<size_t>(arity - k + 1));
                outer.insert(outer.end(), tuple.begin(), tuple.begin() + j);
                outer.push_back(mask);
                outer.insert(outer.end(), tuple.begin() + j + k, tuple.end());
                ExtElement v = tc.eval(outer) * c;
                if (sign < 0) v = -v;
                acc += v;
            }
        }
    }
    return acc;
}

}  // namespace

StasheffReport check_stasheff(const AInftyInstance& inst, int max_n) {
    const int d = inst.dim();
    const IndexSet full = (IndexSet{1} << d);
    double tuples = 0;
    for (int n = 0; n <= max_n; ++n) tuples += std::pow(static_cast<double>(full), n);
    if (tuples > 2e6)
        throw std::invalid_argument("check_stasheff: basis tuple count exceeds feasibility bound");

    StasheffReport report{max_n, {}};
    for (int arity = 0; arity <= max_n; ++arity) {
        BasisTuple tuple(static_cast<size_t>(arity), 0);
        std::function<void(size_t)> rec = [&](size_t slot) {
            if (slot == tuple.size()) {
                ExtElement defect = stasheff_defect(inst.components(), tuple);
                if (!defect.is_zero())
                    report.violations.push_back({arity, tuple, defect});
                return;
            }
            for (IndexSet s = 0; s < full; ++s) {
                tuple[slot] = s;
                rec(slot + 1);
            }
        };
        rec(0);
    }
    return report;
}

UnitalityReport check_unitality(const AInftyInstance& inst) {
    const int d = inst.dim();
    const int n = inst.trunc_order();
    const IndexSet full = (IndexSet{1} << d);
    const TaylorComponents& tc = inst.components();
    UnitalityReport report;

    for (IndexSet b = 0; b < full; ++b) {
        ExtElement eb = ExtElement::basis(b, d, n);
        if (tc.eval({0, b}) != eb)
            report.violations.push_back({"d^2(s1, b) != b", {0, b}});
        ExtElement expect = (subset_size(b) % 2 != 0) ? -eb : eb;
        if (tc.eval({b, 0}) != expect)
            report.violations.push_back({"d^2(b, s1) != (-1)^{|b|} b", {b, 0}});
    }

    // all other stored arities must vanish on tuples containing s1
    for (const auto& [tuple, value] : tc.entries()) {
        if (tuple.size() == 2) continue;
        bool has_unit = false;
        for (IndexSet s : tuple)
            if (s == 0) has_unit = true;
        if (has_unit && !value.is_zero())
            report.violations.push_back({"d^k (k != 2) nonzero on tuple containing s1", tuple});
    }
    return report;
}

}  // namespace starq
