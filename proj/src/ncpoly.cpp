#include "starq/ncpoly.hpp"

#include <algorithm>

namespace starq {

SymPoly abelianize(const NCPoly& t) {
    SymPoly r(t.dim(), t.trunc_order());
    for (const auto& [w, c] : t.terms()) r.add_term(w.abelianized(t.dim()), c);
    return r;
}

NCPoly symmetrize(const SymPoly& f) {
    NCPoly r(f.dim(), f.trunc_order());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> letters;
        for (int i = 0; i < f.dim(); ++i)
            letters.insert(letters.end(), static_cast<size_t>(m.exp[i]), i + 1);
        const int n = static_cast<int>(letters.size());
        Rational stab = 1;  // prod a_i!
        for (int i = 0; i < f.dim(); ++i) stab *= factorial(static_cast<unsigned>(m.exp[i]));
        const Rational w = stab / factorial(static_cast<unsigned>(n));
        // letters starts sorted; walk distinct multiset permutations
        do {
            r.add_term(NCWord{letters}, c * w);
        } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return r;
}

}  // namespace starq
