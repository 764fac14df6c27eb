#include "starq/cobar.hpp"

#include <algorithm>

namespace starq {

std::string cobar_generator_name(IndexSet mask) {
    std::string s = "x_{";
    for (int i = 0; i < 32; ++i)
        if (mask & (IndexSet{1} << i)) s += std::to_string(i + 1);
    s += "}";
    return s;
}

int cobar_word_degree(const CobarWord& w) {
    int d = 0;
    for (IndexSet s : w) d += 1 - subset_size(s);
    return d;
}

int cobar_word_weight(const CobarWord& w) {
    int d = 0;
    for (IndexSet s : w) d += subset_size(s);
    return d;
}

void CobarElement::add_term(const CobarWord& w, const HSeries& c) {
    for (IndexSet s : w)
        if (s == 0 || s >= (IndexSet{1} << dim_))
            throw std::invalid_argument("CobarElement: generator mask out of range");
    if (c.trunc_order() != trunc_)
        throw std::invalid_argument("CobarElement: mismatched truncation orders");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CobarElement& CobarElement::operator+=(const CobarElement& o) {
    if (dim_ != o.dim_ || trunc_ != o.trunc_)
        throw std::invalid_argument("CobarElement: incompatible operands");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

CobarElement& CobarElement::operator-=(const CobarElement& o) {
    if (dim_ != o.dim_ || trunc_ != o.trunc_)
        throw std::invalid_argument("CobarElement: incompatible operands");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

CobarElement CobarElement::operator-() const {
    CobarElement r(dim_, trunc_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

CobarElement operator*(const CobarElement& a, const CobarElement& b) {
    if (a.dim_ != b.dim_ || a.trunc_ != b.trunc_)
        throw std::invalid_argument("CobarElement: incompatible operands");
    CobarElement r(a.dim_, a.trunc_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            CobarWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

CobarElement& CobarElement::operator*=(const HSeries& c) {
    if (c.trunc_order() != trunc_)
        throw std::invalid_argument("CobarElement: mismatched truncation orders");
    CobarElement r(dim_, trunc_);
    for (const auto& [w, t] : terms_) r.add_term(w, t * c);
    return *this = r;
}

CobarElement& CobarElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, t] : terms_) t *= c;
    return *this;
}

bool CobarElement::is_homogeneous_degree(int deg) const {
    for (const auto& [w, c] : terms_)
        if (cobar_word_degree(w) != deg) return false;
    return true;
}

NCPoly CobarElement::to_ncpoly() const {
    NCPoly r(dim_, trunc_);
    for (const auto& [w, c] : terms_) {
        NCWord word;
        for (IndexSet s : w) {
            if (subset_size(s) != 1)
                throw std::domain_error(
                    "CobarElement: word contains non-singleton generators");
            word.letters.push_back(__builtin_ctz(s) + 1);
        }
        r.add_term(word, c);
    }
    return r;
}

CobarElement CobarElement::at_hbar_zero() const {
    CobarElement r(dim_, 0);
    for (const auto& [w, c] : terms_)
        r.add_term(w, HSeries::constant(c.at_zero(), 0));
    return r;
}

namespace {

// Enumerate ordered decompositions I = J u K into nonempty disjoint subsets.
void for_each_split(IndexSet mask, const std::function<void(IndexSet, IndexSet)>& fn) {
    // iterate over nonempty proper submasks J of mask
    for (IndexSet j = (mask - 1) & mask; j != 0; j = (j - 1) & mask) fn(j, mask & ~j);
}

int dual_sign(int weight) { return (weight % 2 != 0) ? 1 : -1; }  // (-1)^{w-1}

// Graded pairing of a dual tensor against a tensor of suspended basis
// elements: (-1)^{sum_{t<s} (|J_t|-1)(|J_s|-1)} over the input tuple.
int pairing_sign(const BasisTuple& tuple) {
    int acc = 0;
    int seen_odd = 0;  // count of earlier factors with odd shifted degree
    for (IndexSet s : tuple) {
        int deg = subset_size(s) - 1;
        if (deg % 2 != 0) {
            acc += seen_odd;
            ++seen_odd;
        }
    }
    return (acc % 2 != 0) ? -1 : 1;
}

}  // namespace

CobarElement classical_delta(int dim, int trunc, IndexSet mask) {
    if (mask == 0 || mask >= (IndexSet{1} << dim))
        throw std::invalid_argument("classical_delta: generator mask out of range");
    CobarElement r(dim, trunc);
    const int eps = dual_sign(subset_size(mask));
    for_each_split(mask, [&](IndexSet j, IndexSet k) {
        int sign = shuffle_sign(j, k);
        if (subset_size(j) % 2 != 0) sign = -sign;
        sign *= eps * pairing_sign({j, k});
        r.add_term({j, k}, HSeries::constant(sign, trunc));
    });
    return r;
}

CobarElement deformed_delta(const AInftyInstance& inst, IndexSet mask) {
    const int dim = inst.dim();
    const int trunc = inst.trunc_order();
    if (mask == 0 || mask >= (IndexSet{1} << dim))
        throw std::invalid_argument("deformed_delta: generator mask out of range");
    CobarElement r(dim, trunc);
    const int eps = dual_sign(subset_size(mask));
    for (const auto& [tuple, value] : inst.components().entries()) {
        bool normalized = true;
        for (IndexSet s : tuple)
            if (s == 0) normalized = false;
        if (!normalized) continue;  // tuples with s1 are invisible to B+[1]*
        HSeries c = value.coeff(mask);
        if (c.is_zero()) continue;
        if (eps * pairing_sign(tuple) < 0) c = -c;
        r.add_term(tuple, c);
    }
    return r;
}

CobarDifferential CobarDifferential::classical(int dim, int trunc) {
    CobarDifferential d(dim, trunc);
    for (IndexSet mask = 1; mask < (IndexSet{1} << dim); ++mask)
        d.gen_images_.emplace(mask, classical_delta(dim, trunc, mask));
    return d;
}

CobarDifferential CobarDifferential::deformed(const AInftyInstance& inst) {
    CobarDifferential d(inst.dim(), inst.trunc_order());
    for (IndexSet mask = 1; mask < (IndexSet{1} << inst.dim()); ++mask)
        d.gen_images_.emplace(mask, deformed_delta(inst, mask));
    return d;
}

const CobarElement& CobarDifferential::on_generator(IndexSet mask) const {
    auto it = gen_images_.find(mask);
    if (it == gen_images_.end())
        throw std::invalid_argument("CobarDifferential: generator mask out of range");
    return it->second;
}

CobarElement CobarDifferential::apply(const CobarElement& e) const {
    CobarElement r(dim_, trunc_);
    for (const auto& [word, coeff] : e.terms()) {
        int prefix_degree = 0;
        for (size_t t = 0; t < word.size(); ++t) {
            CobarElement head(dim_, trunc_);
            head.add_term(CobarWord(word.begin(), word.begin() + t), HSeries::one(trunc_));
            CobarElement tail(dim_, trunc_);
            tail.add_term(CobarWord(word.begin() + t + 1, word.end()), HSeries::one(trunc_));
            CobarElement piece = head * on_generator(word[t]) * tail;
            piece *= coeff;
            if (prefix_degree % 2 != 0) piece *= Rational(-1);
            r += piece;
            prefix_degree += 1 - subset_size(word[t]);
        }
    }
    return r;
}

bool CobarDifferential::preserves_weight() const {
    for (const auto& [mask, image] : gen_images_) {
        int w = subset_size(mask);
        for (const auto& [word, c] : image.terms())
            if (cobar_word_weight(word) != w) return false;
    }
    return true;
}

std::vector<NCPoly> quotient_relations(const AInftyInstance& inst) {
    std::vector<NCPoly> rels;
    const int d = inst.dim();
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            IndexSet mask = (IndexSet{1} << (i - 1)) | (IndexSet{1} << (j - 1));
            rels.push_back(deformed_delta(inst, mask).to_ncpoly());
        }
    return rels;
}

NCPoly quadratic_first_order_relation(const PoissonBivector& pi, int i, int j) {
    if (!pi.is_class(PoissonClass::quadratic))
        throw std::invalid_argument(
            "quadratic_first_order_relation: structure is not quadratic");
    if (i < 1 || j < 1 || i > pi.dim() || j > pi.dim() || i == j)
        throw std::invalid_argument("quadratic_first_order_relation: bad index pair");
    const int trunc = 1;  // relation is only valid modulo h^2
    const int d = pi.dim();
    NCPoly r(d, trunc);
    r.add_term(NCWord{{i, j}}, HSeries::one(trunc));
    r.add_term(NCWord{{j, i}}, HSeries::constant(-1, trunc));
    SymPoly entry(d, trunc);
    for (const auto& [m, c] : pi.entry(i, j).terms())
        entry.add_term(m, c.retruncated(trunc));
    r -= symmetrize(entry) * HSeries::hbar(trunc, 1);
    return r;
}

DeltaSquaredReport check_delta_squared(const CobarDifferential& delta, int max_weight) {
    DeltaSquaredReport report{max_weight, {}};
    for (IndexSet mask = 1; mask < (IndexSet{1} << delta.dim()); ++mask) {
        if (subset_size(mask) > max_weight) continue;
        CobarElement dd = delta.apply(delta.on_generator(mask));
        if (!dd.is_zero()) report.violations.push_back({mask, dd});
    }
    return report;
}

int rational_matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<CobarWord> cobar_words_at(int dim, int degree, int weight) {
    std::vector<CobarWord> out;
    const int parts = weight + degree;
    if (weight < 0 || parts < 0) return out;
    if (parts == 0) {
        if (weight == 0) out.push_back({});
        return out;
    }
    CobarWord word;
    std::function<void(int, int)> rec = [&](int remaining_weight, int remaining_parts) {
        if (remaining_parts == 0) {
            if (remaining_weight == 0) out.push_back(word);
            return;
        }
        for (int size = 1; size <= std::min(dim, remaining_weight); ++size) {
            // remaining parts each need weight >= 1
            if (remaining_weight - size < remaining_parts - 1) continue;
            for (IndexSet s = 1; s < (IndexSet{1} << dim); ++s) {
                if (subset_size(s) != size) continue;
                word.push_back(s);
                rec(remaining_weight - size, remaining_parts - 1);
                word.pop_back();
            }
        }
    };
    rec(weight, parts);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<CobarWord> slot_words(int dim, int degree, int weight, bool windowed) {
    if (!windowed) return cobar_words_at(dim, degree, weight);
    std::vector<CobarWord> out;
    for (int w = 0; w <= weight; ++w) {
        auto ws = cobar_words_at(dim, degree, w);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Flattened matrix of delta from the span of `src` into the span of `dst`.
// Each word carries N+1 rational coordinates (one per power of h).
std::vector<std::vector<Rational>> delta_matrix(const CobarDifferential& delta,
                                                const std::vector<CobarWord>& src,
                                                const std::vector<CobarWord>& dst) {
    const int n = delta.trunc_order();
    const size_t blocks = static_cast<size_t>(n) + 1;
    std::map<CobarWord, size_t> dst_index;
    for (size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);

    std::vector<std::vector<Rational>> m(
        dst.size() * blocks, std::vector<Rational>(src.size() * blocks, Rational(0)));
    for (size_t s = 0; s < src.size(); ++s) {
        CobarElement e(delta.dim(), n);
        e.add_term(src[s], HSeries::one(n));
        CobarElement image = delta.apply(e);
        for (const auto& [word, c] : image.terms()) {
            auto it = dst_index.find(word);
            if (it == dst_index.end())
                throw std::logic_error("delta_matrix: image leaves the target slot");
            for (size_t sh = 0; sh < blocks; ++sh)        // source h-power
                for (size_t th = sh; th < blocks; ++th)   // target h-power
                    m[it->second * blocks + th][s * blocks + sh] = c.coeff(static_cast<int>(th - sh));
        }
    }
    return m;
}

}  // namespace

CohomologySlot cohomology_slot(const CobarDifferential& delta, int degree, int weight) {
    const bool windowed = !delta.preserves_weight();
    const int dim = delta.dim();
    auto here = slot_words(dim, degree, weight, windowed);
    auto below = slot_words(dim, degree - 1, weight, windowed);
    auto above = slot_words(dim, degree + 1, weight, windowed);

    const size_t blocks = static_cast<size_t>(delta.trunc_order()) + 1;
    const size_t flat = (here.size() + below.size() + above.size()) * blocks;
    if (flat > 20000)
        throw std::invalid_argument(
            "cohomology_slot: window of flattened dimension " + std::to_string(flat) +
            " exceeds the feasibility bound (20000); shrink degree/weight");

    int rank_out = rational_matrix_rank(delta_matrix(delta, here, above));
    int rank_in = rational_matrix_rank(delta_matrix(delta, below, here));
    int dim_flat = static_cast<int>(here.size() * blocks);
    return {degree, weight, windowed, dim_flat, rank_out, rank_in,
            dim_flat - rank_out - rank_in};
}

std::vector<CohomologySlot> cohomology_table(const CobarDifferential& delta,
                                             int degree_min, int degree_max,
                                             int max_weight) {
    std::vector<CohomologySlot> out;
    for (int w = 1; w <= max_weight; ++w)
        for (int k = degree_min; k <= degree_max; ++k)
            out.push_back(cohomology_slot(delta, k, w));
    return out;
}

}  // namespace starq
