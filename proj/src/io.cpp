#include "starq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace starq {

std::vector<std::string> default_generator_names(int dim) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(dim));
    for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

struct Atom {
    int power;
    Rational coeff;
};

std::vector<Atom> atoms_of(const HSeries& c) {
    std::vector<Atom> out;
    for (int k = 0; k <= c.trunc_order(); ++k)
        if (c.coeff(k) != 0) out.push_back({k, c.coeff(k)});
    return out;
}

std::string atom_str(const Atom& a, bool with_sign) {
    Rational q = with_sign ? a.coeff : Rational(abs(a.coeff));
    std::string s;
    if (a.power == 0) return q.get_str();
    if (q == 1) {
        s = "";
    } else if (q == -1) {
        s = "-";
    } else {
        s = q.get_str() + "*";
    }
    s += "h";
    if (a.power >= 2) s += "^" + std::to_string(a.power);
    return s;
}

// sign-normalized coefficient body: sign of the lowest h-power leads
struct CoeffText {
    int sign;
    std::string body;
    bool multi;
    bool is_plain_one;
};

CoeffText coeff_text(const HSeries& c) {
    std::vector<Atom> atoms = atoms_of(c);
    if (atoms.empty()) return {0, "0", false, false};
    int sign = atoms[0].coeff > 0 ? 1 : -1;
    if (atoms.size() == 1) {
        Atom a = atoms[0];
        a.coeff = abs(a.coeff);
        bool one = (a.power == 0 && a.coeff == 1);
        return {sign, atom_str(a, true), false, one};
    }
    std::string body;
    for (size_t i = 0; i < atoms.size(); ++i) {
        Atom a = atoms[i];
        Rational q = a.coeff * sign;  // relative to the extracted sign
        bool neg = q < 0;
        a.coeff = abs(a.coeff);
        if (i == 0)
            body += atom_str(a, false);
        else
            body += (neg ? " - " : " + ") + atom_str(a, false);
    }
    return {sign, body, true, false};
}

template <typename Key, typename FormatKey, typename DegreeOf>
std::string print_terms(const std::map<Key, HSeries>& terms_in, FormatKey fmt,
                        DegreeOf degree_of) {
    if (terms_in.empty()) return "0";
    std::vector<std::pair<Key, HSeries>> terms(terms_in.begin(), terms_in.end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        int da = degree_of(a.first), db = degree_of(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        CoeffText ct = coeff_text(coeff);
        std::string key_str = fmt(key);
        std::string term;
        if (key_str.empty()) {  // scalar term
            term = ct.multi ? "(" + ct.body + ")" : ct.body;
        } else if (ct.is_plain_one) {
            term = key_str;
        } else if (ct.multi) {
            term = "(" + ct.body + ")*" + key_str;
        } else {
            term = ct.body + "*" + key_str;
        }
        if (first) {
            out += (ct.sign < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (ct.sign < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string name_of(int i, const std::vector<std::string>& names) {
    if (names.empty()) return "x" + std::to_string(i);
    return names.at(static_cast<size_t>(i - 1));
}

}  // namespace

std::string describe(const HSeries& c) {
    CoeffText ct = coeff_text(c);
    if (ct.sign == 0) return "0";
    std::string out = ct.sign < 0 ? "-" : "";
    return out + ct.body;
}

std::string describe(const SymPoly& p, const std::vector<std::string>& names) {
    std::map<std::vector<int>, HSeries> plain;
    for (const auto& [m, c] : p.terms()) plain.emplace(m.exp, c);
    return print_terms(
        plain,
        [&](const std::vector<int>& exp) {
            std::string s;
            for (size_t i = 0; i < exp.size(); ++i) {
                if (exp[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += name_of(static_cast<int>(i + 1), names);
                if (exp[i] >= 2) s += "^" + std::to_string(exp[i]);
            }
            return s;
        },
        [](const std::vector<int>& exp) {
            int d = 0;
            for (int e : exp) d += e;
            return d;
        });
}

std::string describe(const NCPoly& p, const std::vector<std::string>& names) {
    std::map<std::vector<int>, HSeries> plain;
    for (const auto& [w, c] : p.terms()) plain.emplace(w.letters, c);
    return print_terms(
        plain,
        [&](const std::vector<int>& letters) {
            std::string s;
            size_t i = 0;
            while (i < letters.size()) {
                size_t run = i;
                while (run < letters.size() && letters[run] == letters[i]) ++run;
                if (!s.empty()) s += "*";
                s += name_of(letters[i], names);
                if (run - i >= 2) s += "^" + std::to_string(run - i);
                i = run;
            }
            return s;
        },
        [](const std::vector<int>& letters) { return static_cast<int>(letters.size()); });
}

std::string describe(const ExtElement& e) {
    std::map<std::vector<int>, HSeries> plain;
    for (const auto& [mask, c] : e.terms()) {
        std::vector<int> key;
        key.push_back(subset_size(mask));  // degree-major ordering key
        for (int i = 0; i < 32; ++i)
            if (mask & (IndexSet{1} << i)) key.push_back(i + 1);
        plain.emplace(key, c);
    }
    return print_terms(
        plain,
        [](const std::vector<int>& key) {
            if (key.size() == 1) return std::string();  // e_{} is the unit
            std::string s = "e_{";
            for (size_t i = 1; i < key.size(); ++i) s += std::to_string(key[i]);
            return s + "}";
        },
        [](const std::vector<int>& key) { return key[0]; });
}

std::string describe(const CobarElement& e) {
    std::map<std::vector<IndexSet>, HSeries> plain;
    for (const auto& [w, c] : e.terms()) plain.emplace(w, c);
    return print_terms(
        plain,
        [](const std::vector<IndexSet>& word) {
            std::string s;
            for (IndexSet m : word) {
                if (!s.empty()) s += "*";
                s += cobar_generator_name(m);
            }
            return s;
        },
        [](const std::vector<IndexSet>& word) {
            return cobar_word_weight(word);
        });
}

// ---- parser -----------------------------------------------------------

namespace {

struct Token {
    enum Kind { number, name, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) return {Token::end, "", start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::number, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::name, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::plus, "+", start};
            case '-': return {Token::minus, "-", start};
            case '*': return {Token::star, "*", start};
            case '/': return {Token::slash, "/", start};
            case '^': return {Token::caret, "^", start};
            case '(': return {Token::lparen, "(", start};
            case ')': return {Token::rparen, ")", start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

  private:
    const std::string& s_;
    size_t i_ = 0;
};

class ExprParser {
  public:
    ExprParser(const std::string& text, int dim, int trunc,
               const std::vector<std::string>& names)
        : lexer_(text), dim_(dim), trunc_(trunc) {
        names_ = names.empty() ? default_generator_names(dim) : names;
        if (static_cast<int>(names_.size()) != dim)
            throw std::invalid_argument("parser: generator name list has wrong size");
        advance();
    }

    NCPoly parse() {
        NCPoly r = expr();
        expect(Token::end, "end of input");
        return r;
    }

  private:
    void advance() { tok_ = lexer_.next(); }
    void expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k)
            throw ParseError("expected " + what, tok_.pos);
    }

    NCPoly expr() {
        NCPoly acc = term();
        while (tok_.kind == Token::plus || tok_.kind == Token::minus) {
            bool neg = tok_.kind == Token::minus;
            advance();
            NCPoly t = term();
            acc = neg ? acc - t : acc + t;
        }
        return acc;
    }

    NCPoly term() {
        NCPoly acc = factor();
        while (tok_.kind == Token::star || tok_.kind == Token::slash) {
            bool div = tok_.kind == Token::slash;
            size_t at = tok_.pos;
            advance();
            NCPoly f = factor();
            if (div) {
                // division only by invertible scalars
                if (f.terms().size() != 1 || !f.terms().begin()->first.is_one())
                    throw ParseError("division is only defined by scalars", at);
                const HSeries& c = f.terms().begin()->second;
                if (!c.is_unit())
                    throw ParseError("division by a non-invertible scalar", at);
                acc *= c.inverse();
            } else {
                acc *= f;
            }
        }
        return acc;
    }

    NCPoly factor() {
        if (tok_.kind == Token::minus) {
            advance();
            return -factor();
        }
        NCPoly base = primary();
        if (tok_.kind == Token::caret) {
            advance();
            expect(Token::number, "integer exponent");
            long e = std::stol(tok_.text);
            if (e < 0 || e > 64) throw ParseError("exponent out of range", tok_.pos);
            advance();
            NCPoly r = NCPoly::one(dim_, trunc_);
            for (long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }

    NCPoly primary() {
        if (tok_.kind == Token::number) {
            Rational q = rational_from_string(tok_.text);
            advance();
            return NCPoly::constant(q, dim_, trunc_);
        }
        if (tok_.kind == Token::name) {
            std::string name = tok_.text;
            size_t at = tok_.pos;
            advance();
            if (name == "h") {
                NCPoly p(dim_, trunc_);
                p.add_term(NCWord{}, HSeries::hbar(trunc_, 1));
                return p;
            }
            for (int i = 1; i <= dim_; ++i)
                if (names_[static_cast<size_t>(i - 1)] == name)
                    return NCPoly::generator(i, dim_, trunc_);
            throw ParseError("unknown generator '" + name + "'", at);
        }
        if (tok_.kind == Token::lparen) {
            advance();
            NCPoly r = expr();
            expect(Token::rparen, "')'");
            advance();
            return r;
        }
        throw ParseError("expected a number, generator, or '('", tok_.pos);
    }

    Lexer lexer_;
    Token tok_{Token::end, "", 0};
    int dim_;
    int trunc_;
    std::vector<std::string> names_;
};

}  // namespace

NCPoly parse_ncpoly(const std::string& text, int dim, int trunc,
                    const std::vector<std::string>& names) {
    return ExprParser(text, dim, trunc, names).parse();
}

SymPoly parse_sympoly(const std::string& text, int dim, int trunc,
                      const std::vector<std::string>& names) {
    return abelianize(parse_ncpoly(text, dim, trunc, names));
}

// ---- JSON -----------------------------------------------------------------

Json to_json(const HSeries& c) {
    Json arr = Json::array();
    for (int k = 0; k <= c.trunc_order(); ++k) arr.push_back(c.coeff(k).get_str());
    return arr;
}

HSeries hseries_from_json(const Json& j, int trunc) {
    if (!j.is_array() || static_cast<int>(j.size()) != trunc + 1)
        throw std::invalid_argument("hseries_from_json: expected array of N+1 strings");
    HSeries c(trunc);
    for (int k = 0; k <= trunc; ++k)
        c.set_coeff(k, rational_from_string(j.at(static_cast<size_t>(k)).get<std::string>()));
    return c;
}

Json to_json(const SymPoly& p) {
    Json j;
    j["dim"] = p.dim();
    j["trunc"] = p.trunc_order();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"exp", m.exp}, {"coeff", to_json(c)}});
    j["terms"] = terms;
    return j;
}

SymPoly sympoly_from_json(const Json& j) {
    SymPoly p(j.at("dim").get<int>(), j.at("trunc").get<int>());
    for (const auto& t : j.at("terms")) {
        SymMonomial m(p.dim());
        m.exp = t.at("exp").get<std::vector<int>>();
        p.add_term(m, hseries_from_json(t.at("coeff"), p.trunc_order()));
    }
    return p;
}

Json to_json(const NCPoly& p) {
    Json j;
    j["dim"] = p.dim();
    j["trunc"] = p.trunc_order();
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back(Json{{"word", w.letters}, {"coeff", to_json(c)}});
    j["terms"] = terms;
    return j;
}

NCPoly ncpoly_from_json(const Json& j) {
    NCPoly p(j.at("dim").get<int>(), j.at("trunc").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(NCWord{t.at("word").get<std::vector<int>>()},
                   hseries_from_json(t.at("coeff"), p.trunc_order()));
    return p;
}

namespace {

std::vector<int> mask_to_indices(IndexSet mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (IndexSet{1} << i)) out.push_back(i + 1);
    return out;
}

IndexSet indices_to_mask(const std::vector<int>& idx, int dim) {
    IndexSet m = 0;
    for (int i : idx) {
        if (i < 1 || i > dim)
            throw std::invalid_argument("index out of range in JSON index set");
        IndexSet bit = IndexSet{1} << (i - 1);
        if (m & bit) throw std::invalid_argument("repeated index in JSON index set");
        m |= bit;
    }
    return m;
}

}  // namespace

Json to_json(const ExtElement& e) {
    Json j;
    j["dim"] = e.dim();
    j["trunc"] = e.trunc_order();
    Json terms = Json::array();
    for (const auto& [mask, c] : e.terms())
        terms.push_back(Json{{"indices", mask_to_indices(mask)}, {"coeff", to_json(c)}});
    j["terms"] = terms;
    return j;
}

ExtElement ext_from_json(const Json& j) {
    ExtElement e(j.at("dim").get<int>(), j.at("trunc").get<int>());
    for (const auto& t : j.at("terms"))
        e.add_term(indices_to_mask(t.at("indices").get<std::vector<int>>(), e.dim()),
                   hseries_from_json(t.at("coeff"), e.trunc_order()));
    return e;
}

Json to_json(const PoissonBivector& pi) {
    Json j;
    j["dim"] = pi.dim();
    j["trunc"] = pi.trunc_order();
    j["class"] = to_string(pi.poisson_class());
    Json entries = Json::array();
    for (int i = 1; i <= pi.dim(); ++i)
        for (int jj = i + 1; jj <= pi.dim(); ++jj) {
            if (pi.entry(i, jj).is_zero()) continue;
            entries.push_back(Json{{"i", i},
                                   {"j", jj},
                                   {"entry", describe(pi.entry(i, jj))}});
        }
    j["entries"] = entries;
    return j;
}

Json to_json(const TaylorComponents& tc) {
    Json j;
    j["dim"] = tc.dim();
    j["trunc"] = tc.trunc_order();
    Json comps = Json::array();
    for (const auto& [tuple, value] : tc.entries()) {
        Json inputs = Json::array();
        for (IndexSet m : tuple) inputs.push_back(mask_to_indices(m));
        comps.push_back(Json{{"inputs", inputs}, {"output", to_json(value)["terms"]}});
    }
    j["components"] = comps;
    return j;
}

TaylorComponents taylor_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    const int trunc = j.at("trunc").get<int>();
    TaylorComponents tc(dim, trunc);
    for (const auto& comp : j.at("components")) {
        BasisTuple tuple;
        for (const auto& idx : comp.at("inputs"))
            tuple.push_back(indices_to_mask(idx.get<std::vector<int>>(), dim));
        ExtElement value(dim, trunc);
        for (const auto& t : comp.at("output"))
            value.add_term(indices_to_mask(t.at("indices").get<std::vector<int>>(), dim),
                           hseries_from_json(t.at("coeff"), trunc));
        tc.set(tuple, value);
    }
    return tc;
}

Json to_json(const AInftyInstance& inst) {
    Json j = to_json(inst.components());
    j["label"] = inst.label();
    j["verified"] = inst.verified();
    return j;
}

AInftyInstance instance_from_json(const Json& j) {
    std::string label = j.value("label", std::string("custom"));
    AInftyInstance inst(taylor_from_json(j), label);
    // loaded instances stay unverified until check_stasheff passes
    return inst;
}

Json to_json(const RewriteSystem& sys) {
    Json j;
    j["dim"] = sys.dim();
    j["trunc"] = sys.trunc_order();
    j["degree_bound"] = sys.degree_bound();
    j["status"] = to_string(sys.status());
    Json rules = Json::array();
    for (const auto& r : sys.rules())
        rules.push_back(Json{{"lhs", r.lhs.letters}, {"rhs", to_json(r.rhs)["terms"]}});
    j["rules"] = rules;
    return j;
}

RewriteSystem rewrite_system_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    const int trunc = j.at("trunc").get<int>();
    std::vector<NCPoly> relations;
    for (const auto& r : j.at("rules")) {
        NCPoly rel(dim, trunc);
        rel.add_term(NCWord{r.at("lhs").get<std::vector<int>>()}, HSeries::one(trunc));
        for (const auto& t : r.at("rhs"))
            rel.add_term(NCWord{t.at("word").get<std::vector<int>>()},
                         -hseries_from_json(t.at("coeff"), trunc));
        relations.push_back(rel);
    }
    RewriteSystem sys =
        RewriteSystem::build(dim, trunc, relations, j.at("degree_bound").get<int>());
    if (j.at("status").get<std::string>() == "completed") return complete(sys, 1024);
    return sys;
}

Json to_json(const CohomologySlot& slot) {
    Json j;
    j["degree"] = slot.degree;
    j["weight"] = slot.weight;
    j["windowed"] = slot.windowed;
    j["dim"] = slot.dim_flat;
    j["rank_out"] = slot.rank_out;
    j["rank_in"] = slot.rank_in;
    j["h_dim"] = slot.h_dim;
    return j;
}

ProblemFile load_problem(const Json& j) {
    ProblemFile pf;
    if (!j.contains("dim")) throw std::invalid_argument("problem file: missing 'dim'");
    pf.dim = j.at("dim").get<int>();
    if (pf.dim < 1 || pf.dim > 16)
        throw std::invalid_argument("problem file: dim out of range [1,16]");
    pf.trunc = j.value("trunc", 4);
    pf.degree = j.value("degree", 8);
    if (pf.trunc < 0 || pf.degree < 0)
        throw std::invalid_argument("problem file: negative trunc/degree");
    if (j.contains("generators")) {
        pf.names = j.at("generators").get<std::vector<std::string>>();
        if (static_cast<int>(pf.names.size()) != pf.dim)
            throw std::invalid_argument("problem file: generator list size != dim");
    } else {
        pf.names = default_generator_names(pf.dim);
    }
    std::vector<std::tuple<int, int, SymPoly>> upper;
    if (j.contains("poisson")) {
        for (const auto& e : j.at("poisson")) {
            int i = e.at("i").get<int>();
            int jj = e.at("j").get<int>();
            if (i < 1 || jj < 1 || i > pf.dim || jj > pf.dim || i >= jj)
                throw std::invalid_argument(
                    "problem file: poisson entries need 1 <= i < j <= dim");
            SymPoly entry = parse_sympoly(e.at("entry").get<std::string>(), pf.dim,
                                          pf.trunc, pf.names);
            upper.emplace_back(i, jj, entry);
        }
    }
    pf.poisson = PoissonBivector(pf.dim, pf.trunc, upper);
    pf.suite = j.value("suite", std::string());
    pf.max_weight = j.value("max_weight", 4);
    if (j.contains("instance"))
        pf.custom_instance = instance_from_json(j.at("instance"));
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("problem file " + path + ": " + e.what());
    }
    return load_problem(j);
}

}  // namespace starq
