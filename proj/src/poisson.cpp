#include "starq/poisson.hpp"

namespace starq {

std::string to_string(PoissonClass c) {
    switch (c) {
        case PoissonClass::constant: return "constant";
        case PoissonClass::linear: return "linear";
        case PoissonClass::quadratic: return "quadratic";
        case PoissonClass::general: return "general";
    }
    return "general";
}

PoissonBivector::PoissonBivector(
    int dim, int trunc, const std::vector<std::tuple<int, int, SymPoly>>& upper)
    : dim_(dim), trunc_(trunc), class_(PoissonClass::general) {
    if (dim < 1) throw std::invalid_argument("PoissonBivector: dim must be >= 1");
    entries_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim),
                    SymPoly::zero(dim, trunc));
    for (const auto& [i, j, p] : upper) {
        check_range(i);
        check_range(j);
        if (i >= j)
            throw std::invalid_argument("PoissonBivector: entries must have i < j");
        if (p.dim() != dim || p.trunc_order() != trunc)
            throw std::invalid_argument("PoissonBivector: entry dimension/truncation mismatch");
        entries_[static_cast<size_t>((i - 1) * dim + (j - 1))] = p;
        entries_[static_cast<size_t>((j - 1) * dim + (i - 1))] = -p;
    }
    for (int deg = 0; deg <= 2; ++deg) {
        bool homog = true;
        for (int i = 1; i <= dim && homog; ++i)
            for (int j = 1; j <= dim && homog; ++j)
                if (!entry(i, j).is_homogeneous(deg)) homog = false;
        if (homog) {
            class_ = static_cast<PoissonClass>(deg);
            break;
        }
    }
}

const SymPoly& PoissonBivector::entry(int i, int j) const {
    check_range(i);
    check_range(j);
    return entries_[static_cast<size_t>((i - 1) * dim_ + (j - 1))];
}

Rational PoissonBivector::constant_entry(int i, int j) const {
    const SymPoly& p = entry(i, j);
    if (!p.is_homogeneous(0))
        throw std::domain_error("PoissonBivector: entry is not constant");
    HSeries c = p.coeff(SymMonomial(dim_));
    for (int k = 1; k <= trunc_; ++k)
        if (c.coeff(k) != 0)
            throw std::domain_error("PoissonBivector: entry has h-dependence");
    return c.at_zero();
}

Rational PoissonBivector::structure_constant(int i, int j, int k) const {
    check_range(k);
    HSeries c = entry(i, j).coeff(SymMonomial::generator(dim_, k));
    return c.at_zero();
}

bool PoissonBivector::is_class(PoissonClass c) const {
    if (c == PoissonClass::general) return true;
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j)
            if (!entry(i, j).is_homogeneous(static_cast<int>(c))) return false;
    return true;
}

SymPoly PoissonBivector::bidiff(const SymPoly& f, const SymPoly& g) const {
    SymPoly r(dim_, trunc_);
    std::vector<SymPoly> df, dg;
    df.reserve(static_cast<size_t>(dim_));
    dg.reserve(static_cast<size_t>(dim_));
    for (int i = 1; i <= dim_; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j) {
            const SymPoly& p = entry(i, j);
            if (p.is_zero()) continue;
            r += p * df[static_cast<size_t>(i - 1)] * dg[static_cast<size_t>(j - 1)];
        }
    return r;
}

SymPoly PoissonBivector::bracket(const SymPoly& f, const SymPoly& g) const {
    return bidiff(f, g) - bidiff(g, f);
}

SymPoly PoissonBivector::jacobi_defect(int i, int j, int k) const {
    SymPoly r(dim_, trunc_);
    for (int l = 1; l <= dim_; ++l) {
        r += entry(i, l) * entry(j, k).derivative(l);
        r += entry(j, l) * entry(k, i).derivative(l);
        r += entry(k, l) * entry(i, j).derivative(l);
    }
    return r;
}

bool PoissonBivector::is_poisson() const { return jacobi_witness().empty(); }

std::vector<int> PoissonBivector::jacobi_witness() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            for (int k = j + 1; k <= dim_; ++k)
                if (!jacobi_defect(i, j, k).is_zero()) return {i, j, k};
    return {};
}

void PoissonBivector::check_range(int i) const {
    if (i < 1 || i > dim_)
        throw std::invalid_argument("PoissonBivector: index out of range");
}

SymPoly poisson_bracket(const PoissonBivector& pi, const SymPoly& f,
                        const SymPoly& g) {
    return pi.bracket(f, g);
}

namespace examples {

PoissonBivector weyl(int dim, int trunc) {
    if (dim % 2 != 0)
        throw std::invalid_argument("weyl: dimension must be even");
    std::vector<std::tuple<int, int, SymPoly>> upper;
    for (int k = 1; 2 * k <= dim; ++k)
        upper.emplace_back(2 * k - 1, 2 * k, SymPoly::one(dim, trunc));
    return PoissonBivector(dim, trunc, upper);
}

PoissonBivector constant_filled(int dim, int trunc) {
    std::vector<std::tuple<int, int, SymPoly>> upper;
    long v = 1;
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            upper.emplace_back(i, j, SymPoly::constant(rational(v++), dim, trunc));
    return PoissonBivector(dim, trunc, upper);
}

PoissonBivector heisenberg(int trunc) {
    return PoissonBivector(3, trunc,
                           {{1, 2, SymPoly::generator(3, 3, trunc)}});
}

PoissonBivector sl2(int trunc) {
    return PoissonBivector(3, trunc,
                           {{1, 2, SymPoly::generator(3, 3, trunc)},
                            {2, 3, SymPoly::generator(1, 3, trunc)},
                            {1, 3, -SymPoly::generator(2, 3, trunc)}});
}

PoissonBivector solvable2(int trunc) {
    return PoissonBivector(2, trunc, {{1, 2, SymPoly::generator(1, 2, trunc)}});
}

PoissonBivector quantum_plane(int trunc) {
    SymPoly x1x2 = SymPoly::generator(1, 2, trunc) * SymPoly::generator(2, 2, trunc);
    return PoissonBivector(2, trunc, {{1, 2, x1x2}});
}

PoissonBivector quadratic_x1sq(int trunc) {
    SymPoly x1sq = SymPoly::generator(1, 2, trunc) * SymPoly::generator(1, 2, trunc);
    return PoissonBivector(2, trunc, {{1, 2, x1sq}});
}

}  // namespace examples

}  // namespace starq
