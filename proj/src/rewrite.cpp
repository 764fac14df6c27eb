#include "starq/rewrite.hpp"

#include <algorithm>
#include <functional>

namespace starq {

std::string to_string(SystemStatus s) {
    switch (s) {
        case SystemStatus::raw: return "raw";
        case SystemStatus::completed: return "completed";
        case SystemStatus::nonconfluent: return "nonconfluent";
    }
    return "raw";
}

namespace {

bool occurs_at(const NCWord& pattern, const NCWord& w, size_t pos) {
    if (pos + pattern.letters.size() > w.letters.size()) return false;
    return std::equal(pattern.letters.begin(), pattern.letters.end(),
                      w.letters.begin() + static_cast<long>(pos));
}

std::string word_str(const NCWord& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.letters[i]);
    }
    return s + ")";
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    size_t below(size_t n) { return static_cast<size_t>(next() % n); }
};

}  // namespace

RewriteSystem RewriteSystem::build(int dim, int trunc,
                                   const std::vector<NCPoly>& relations,
                                   int degree_bound) {
    RewriteSystem sys(dim, trunc, degree_bound);
    std::vector<NCPoly> rels = relations;
    std::sort(rels.begin(), rels.end(), [](const NCPoly& a, const NCPoly& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() < a.is_zero();
        return NCWordLess{}(a.leading_term().first, b.leading_term().first);
    });
    for (const NCPoly& rel : rels) {
        if (rel.dim() != dim || rel.trunc_order() != trunc)
            throw std::invalid_argument("RewriteSystem: relation dimension/truncation mismatch");
        NCPoly reduced = sys.reduce_uncached(rel);
        if (reduced.is_zero()) continue;
        sys.add_oriented(reduced);
    }
    return sys;
}

void RewriteSystem::add_oriented(const NCPoly& reduced_relation) {
    const auto& [lhs, lead] = reduced_relation.leading_term();
    if (lhs.is_one())
        throw std::invalid_argument(
            "RewriteSystem: relation with invertible constant term presents "
            "the zero ring");
    if (!lead.is_unit())
        throw std::invalid_argument(
            "RewriteSystem: leading coefficient of " + word_str(lhs) +
            " is not a unit modulo h; cannot orient over the truncated ring");
    NCPoly monic = reduced_relation * lead.inverse();
    NCPoly rhs = NCPoly::word(lhs, HSeries::one(trunc_), dim_) - monic;
    rules_.push_back({lhs, rhs});
    nf_cache_.clear();
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::find_reduction(
    const NCWord& w) const {
    for (size_t pos = 0; pos < w.letters.size(); ++pos)
        for (size_t r = 0; r < rules_.size(); ++r)
            if (occurs_at(rules_[r].lhs, w, pos)) return std::make_pair(r, pos);
    return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> RewriteSystem::all_reductions(
    const NCWord& w) const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t pos = 0; pos < w.letters.size(); ++pos)
        for (size_t r = 0; r < rules_.size(); ++r)
            if (occurs_at(rules_[r].lhs, w, pos)) out.emplace_back(r, pos);
    return out;
}

bool RewriteSystem::is_irreducible(const NCWord& w) const {
    return !find_reduction(w).has_value();
}

NCPoly RewriteSystem::apply_rule(const NCWord& w, size_t rule, size_t pos) const {
    const RewriteRule& r = rules_[rule];
    NCWord prefix(std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<long>(pos)));
    NCWord suffix(std::vector<int>(
        w.letters.begin() + static_cast<long>(pos + r.lhs.letters.size()), w.letters.end()));
    NCPoly out(dim_, trunc_);
    for (const auto& [t, c] : r.rhs.terms()) out.add_term(prefix * t * suffix, c);
    return out;
}

NCPoly RewriteSystem::reduce_uncached(const NCPoly& p) const {
    NCPoly work = p;
    while (true) {
        bool reduced = false;
        // largest reducible word first
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            auto hit = find_reduction(it->first);
            if (!hit) continue;
            HSeries c = it->second;
            NCWord w = it->first;
            work.add_term(w, -c);
            work += apply_rule(w, hit->first, hit->second) * c;
            reduced = true;
            break;
        }
        if (!reduced) return work;
    }
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    if (status_ != SystemStatus::completed)
        throw std::domain_error("normal_form: system is not completed");
    if (p.degree() > degree_bound_)
        throw std::domain_error("normal_form: degree " + std::to_string(p.degree()) +
                                " exceeds certified bound " +
                                std::to_string(degree_bound_));
    NCPoly out(dim_, trunc_);
    for (const auto& [w, c] : p.terms()) {
        auto it = nf_cache_.find(w.letters);
        if (it == nf_cache_.end()) {
            NCPoly nf(dim_, trunc_);
            auto hit = find_reduction(w);
            if (!hit) {
                nf.add_term(w, HSeries::one(trunc_));
            } else {
                nf = normal_form(apply_rule(w, hit->first, hit->second));
            }
            it = nf_cache_.emplace(w.letters, std::move(nf)).first;
        }
        out += it->second * c;
    }
    return out;
}

NCPoly RewriteSystem::normal_form_random(const NCPoly& p, std::uint64_t seed) const {
    if (status_ != SystemStatus::completed)
        throw std::domain_error("normal_form_random: system is not completed");
    SplitMix rng{seed ^ 0x5bf03635ull};
    NCPoly work = p;
    while (true) {
        std::vector<std::pair<NCWord, std::pair<size_t, size_t>>> candidates;
        for (const auto& [w, c] : work.terms()) {
            auto hits = all_reductions(w);
            if (!hits.empty())
                candidates.emplace_back(w, hits[rng.below(hits.size())]);
        }
        if (candidates.empty()) return work;
        const auto& [w, hit] = candidates[rng.below(candidates.size())];
        HSeries c = work.coeff(w);
        work.add_term(w, -c);
        work += apply_rule(w, hit.first, hit.second) * c;
    }
}

std::vector<long> RewriteSystem::hilbert() const {
    if (status_ != SystemStatus::completed)
        throw std::domain_error("hilbert: system is not completed");
    std::vector<long> counts(static_cast<size_t>(degree_bound_) + 1, 0);
    NCWord word;
    // DFS over words; a reducible word only ever extends to reducible words
    std::function<void(void)> rec = [&]() {
        counts[word.letters.size()] += 1;
        if (static_cast<int>(word.letters.size()) == degree_bound_) return;
        for (int l = 1; l <= dim_; ++l) {
            word.letters.push_back(l);
            bool reducible = false;
            for (const auto& r : rules_) {
                size_t len = r.lhs.letters.size();
                if (len <= word.letters.size() &&
                    occurs_at(r.lhs, word, word.letters.size() - len)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) rec();
            word.letters.pop_back();
        }
    };
    rec();
    return counts;
}

RewriteSystem complete(RewriteSystem sys, int rule_budget) {
    if (sys.status_ == SystemStatus::completed) return sys;
    sys.status_ = SystemStatus::raw;
    sys.witness_.clear();

    std::vector<std::pair<size_t, size_t>> queue;
    for (size_t i = 0; i < sys.rules_.size(); ++i)
        for (size_t j = 0; j < sys.rules_.size(); ++j) queue.emplace_back(i, j);

    auto enqueue_with = [&](size_t k) {
        for (size_t i = 0; i <= k; ++i) {
            queue.emplace_back(i, k);
            if (i != k) queue.emplace_back(k, i);
        }
    };

    auto handle_spoly = [&](const NCWord& ambiguity, const NCPoly& a,
                            const NCPoly& b) -> bool {
        NCPoly s = sys.reduce_uncached(a - b);
        if (s.is_zero()) return true;
        const auto& [lead_word, lead_coeff] = s.leading_term();
        if (!lead_coeff.is_unit()) {
            sys.status_ = SystemStatus::nonconfluent;
            sys.witness_ = "ambiguity " + word_str(ambiguity) +
                           " leaves remainder with non-unit leading word " +
                           word_str(lead_word);
            return false;
        }
        if (static_cast<int>(sys.rules_.size()) >= rule_budget)
            throw std::runtime_error(
                "complete: rule budget " + std::to_string(rule_budget) +
                " exceeded while resolving " + word_str(ambiguity));
        sys.add_oriented(s);
        enqueue_with(sys.rules_.size() - 1);
        return true;
    };

    while (!queue.empty()) {
        auto [i, j] = queue.back();
        queue.pop_back();
        const NCWord a = sys.rules_[i].lhs;
        const NCWord b = sys.rules_[j].lhs;

        // overlap: a proper suffix of A equals a proper prefix of B
        for (size_t len = 1; len < std::min(a.letters.size(), b.letters.size()); ++len) {
            bool match = std::equal(a.letters.end() - static_cast<long>(len),
                                    a.letters.end(), b.letters.begin());
            if (!match) continue;
            NCWord w = a;
            w.letters.insert(w.letters.end(), b.letters.begin() + static_cast<long>(len),
                             b.letters.end());
            if (w.degree() > sys.degree_bound_) continue;
            NCWord tail(std::vector<int>(b.letters.begin() + static_cast<long>(len),
                                         b.letters.end()));
            NCWord head(std::vector<int>(a.letters.begin(),
                                         a.letters.end() - static_cast<long>(len)));
            NCPoly via_a = sys.rules_[i].rhs * NCPoly::word(tail, HSeries::one(sys.trunc_), sys.dim_);
            NCPoly via_b = NCPoly::word(head, HSeries::one(sys.trunc_), sys.dim_) * sys.rules_[j].rhs;
            if (!handle_spoly(w, via_a, via_b)) return sys;
        }

        // inclusion: B occurs strictly inside A
        if (i != j && b.letters.size() < a.letters.size()) {
            for (size_t pos = 0; pos + b.letters.size() <= a.letters.size(); ++pos) {
                if (!occurs_at(b, a, pos)) continue;
                if (a.degree() > sys.degree_bound_) continue;
                NCWord prefix(std::vector<int>(a.letters.begin(),
                                               a.letters.begin() + static_cast<long>(pos)));
                NCWord suffix(std::vector<int>(
                    a.letters.begin() + static_cast<long>(pos + b.letters.size()),
                    a.letters.end()));
                NCPoly via_b = NCPoly::word(prefix, HSeries::one(sys.trunc_), sys.dim_) *
                               sys.rules_[j].rhs *
                               NCPoly::word(suffix, HSeries::one(sys.trunc_), sys.dim_);
                if (!handle_spoly(a, sys.rules_[i].rhs, via_b)) return sys;
            }
        }
    }
    sys.status_ = SystemStatus::completed;
    return sys;
}

}  // namespace starq
