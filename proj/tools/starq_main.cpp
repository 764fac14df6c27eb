// Command-line front end: relations, normal forms, star products,
// verification suites, and cohomology windows over problem files.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "starq/verify.hpp"

using namespace starq;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string format = "text";
    std::optional<int> trunc;
    std::optional<int> degree;
    std::uint64_t seed = 1;
    int trials = 200;
};

PoissonBivector retruncated(const PoissonBivector& pi, int trunc) {
    std::vector<std::tuple<int, int, SymPoly>> upper;
    for (int i = 1; i <= pi.dim(); ++i)
        for (int j = i + 1; j <= pi.dim(); ++j) {
            const SymPoly& e = pi.entry(i, j);
            if (e.is_zero()) continue;
            SymPoly copy(pi.dim(), trunc);
            for (const auto& [m, c] : e.terms()) copy.add_term(m, c.retruncated(trunc));
            upper.emplace_back(i, j, copy);
        }
    return PoissonBivector(pi.dim(), trunc, upper);
}

ProblemFile load(const std::string& path, const GlobalOpts& opts) {
    ProblemFile pf = load_problem_file(path);
    if (opts.trunc) {
        pf.trunc = *opts.trunc;
        pf.poisson = retruncated(*pf.poisson, pf.trunc);
    }
    if (opts.degree) pf.degree = *opts.degree;
    return pf;
}

std::string infer_suite(const ProblemFile& pf) {
    if (!pf.suite.empty()) return pf.suite;
    if (pf.custom_instance) return "custom";
    const PoissonBivector& pi = *pf.poisson;
    if (pi.is_class(PoissonClass::constant)) return "constant";
    if (pi.is_class(PoissonClass::linear)) return "linear";
    if (pi.is_class(PoissonClass::quadratic)) return "quadratic";
    return "general";
}

void require_poisson(const PoissonBivector& pi) {
    auto w = pi.jacobi_witness();
    if (!w.empty())
        throw std::invalid_argument(
            "structure is not Poisson: jacobi_defect(" + std::to_string(w[0]) + "," +
            std::to_string(w[1]) + "," + std::to_string(w[2]) + ") = " +
            describe(pi.jacobi_defect(w[0], w[1], w[2])));
}

// Relation list by structure class (or custom instance). Quadratic
// structures force truncation order 1.
std::pair<std::vector<NCPoly>, int> relation_set(const ProblemFile& pf) {
    if (pf.custom_instance) {
        const AInftyInstance& inst = *pf.custom_instance;
        StasheffReport sr = check_stasheff(inst, std::min(4, inst.dim() <= 3 ? 4 : 3));
        if (!sr.ok())
            throw std::runtime_error(
                "custom instance fails the Stasheff relations at arity " +
                std::to_string(sr.violations.front().arity) + "; refusing to use it");
        return {quotient_relations(inst), inst.trunc_order()};
    }
    const PoissonBivector& pi = *pf.poisson;
    require_poisson(pi);
    if (pi.is_class(PoissonClass::constant))
        return {quotient_relations(build_constant_instance(pi)), pf.trunc};
    if (pi.is_class(PoissonClass::linear))
        return {quotient_relations(build_linear_instance(pi)), pf.trunc};
    if (pi.is_class(PoissonClass::quadratic)) {
        PoissonBivector pi1 = retruncated(pi, 1);
        std::vector<NCPoly> rels;
        for (int i = 1; i <= pi.dim(); ++i)
            for (int j = i + 1; j <= pi.dim(); ++j)
                rels.push_back(quadratic_first_order_relation(pi1, i, j));
        return {rels, 1};
    }
    throw std::invalid_argument(
        "no relation source for a general-class structure; supply a custom instance");
}

int cmd_relations(const std::string& path, const GlobalOpts& opts) {
    ProblemFile pf = load(path, opts);
    auto [rels, trunc] = relation_set(pf);
    if (opts.format == "json") {
        Json j;
        j["dim"] = pf.dim;
        j["trunc"] = trunc;
        Json arr = Json::array();
        for (const auto& r : rels) arr.push_back(describe(r, pf.names));
        j["relations"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rels) std::cout << describe(r, pf.names) << "\n";
    }
    return 0;
}

int cmd_normal_form(const std::string& path, const std::string& expr,
                    const GlobalOpts& opts) {
    ProblemFile pf = load(path, opts);
    auto [rels, trunc] = relation_set(pf);
    RewriteSystem sys =
        complete(RewriteSystem::build(pf.dim, trunc, rels, pf.degree));
    if (sys.status() != SystemStatus::completed)
        throw std::runtime_error("system did not complete: " + sys.witness());
    NCPoly t = parse_ncpoly(expr, pf.dim, trunc, pf.names);
    NCPoly nf = sys.normal_form(t);
    if (opts.format == "json") {
        Json j;
        j["input"] = expr;
        j["normal_form"] = describe(nf, pf.names);
        j["value"] = to_json(nf);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << describe(nf, pf.names) << "\n";
    }
    return 0;
}

int cmd_star(const std::string& path, const std::string& fs, const std::string& gs,
             const GlobalOpts& opts) {
    ProblemFile pf = load(path, opts);
    PoissonBivector pi = *pf.poisson;
    require_poisson(pi);
    int trunc = pf.trunc;
    if (pi.is_class(PoissonClass::quadratic) && !pi.is_class(PoissonClass::constant) &&
        trunc != 1) {
        std::cerr << "note: quadratic structure, truncation clamped to h^2\n";
        trunc = 1;
        pi = retruncated(pi, 1);
    }
    StarAlgebra alg = StarAlgebra::make(pi, pf.degree);
    SymPoly f = parse_sympoly(fs, pf.dim, trunc, pf.names);
    SymPoly g = parse_sympoly(gs, pf.dim, trunc, pf.names);
    SymPoly prod = alg.star(f, g);
    if (opts.format == "json") {
        Json j;
        j["f"] = fs;
        j["g"] = gs;
        j["star"] = describe(prod, pf.names);
        j["value"] = to_json(prod);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << describe(prod, pf.names) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, std::string suite, const GlobalOpts& opts) {
    ProblemFile pf = load(path, opts);
    if (suite.empty()) suite = infer_suite(pf);
    VerificationReport rep;
    if (suite == "constant") {
        rep = verify_constant(*pf.poisson, std::min(pf.degree, 4), pf.trunc,
                              opts.trials, opts.seed);
    } else if (suite == "linear") {
        rep = verify_linear(*pf.poisson, std::min(pf.degree, 4), pf.trunc, opts.seed);
    } else if (suite == "quadratic") {
        rep = verify_quadratic(*pf.poisson, pf.degree, opts.seed);
    } else if (suite == "koszul") {
        rep = verify_koszul(pf.dim, pf.max_weight);
    } else if (suite == "custom") {
        if (!pf.custom_instance)
            throw std::invalid_argument("suite 'custom' needs an 'instance' entry");
        auto t0 = std::chrono::steady_clock::now();
        const AInftyInstance& inst = *pf.custom_instance;
        rep.label = "custom instance checks";
        rep.config = {{"dim", std::to_string(inst.dim())},
                      {"trunc", std::to_string(inst.trunc_order())}};
        int max_n = inst.dim() <= 3 ? 4 : 3;
        StasheffReport sr = check_stasheff(inst, max_n);
        rep.checks.push_back({"stasheff-relations", sr.ok(),
                              "arity <= " + std::to_string(max_n), ""});
        UnitalityReport ur = check_unitality(inst);
        rep.checks.push_back({"unitality", ur.ok(), "", ""});
        DeltaSquaredReport dr = check_delta_squared(
            CobarDifferential::deformed(inst), std::min(inst.dim(), 4));
        rep.checks.push_back({"delta-squared-zero", dr.ok(),
                              "generators of weight <= " +
                                  std::to_string(std::min(inst.dim(), 4)),
                              ""});
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    if (opts.format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.pass() ? 0 : kExitVerifyFail;
}

int cmd_cohomology(const std::string& path, int weight, int deg_min, int deg_max,
                   bool deformed, const GlobalOpts& opts) {
    ProblemFile pf = load(path, opts);
    CobarDifferential delta = [&] {
        if (!deformed) return CobarDifferential::classical(pf.dim, 0);
        if (pf.custom_instance) return CobarDifferential::deformed(*pf.custom_instance);
        const PoissonBivector& pi = *pf.poisson;
        require_poisson(pi);
        if (pi.is_class(PoissonClass::constant))
            return CobarDifferential::deformed(build_constant_instance(pi));
        if (pi.is_class(PoissonClass::linear))
            return CobarDifferential::deformed(build_linear_instance(pi));
        throw std::invalid_argument(
            "deformed cohomology needs a constant/linear structure or a custom instance");
    }();
    std::vector<CohomologySlot> table = cohomology_table(delta, deg_min, deg_max, weight);
    if (opts.format == "json") {
        Json arr = Json::array();
        for (const auto& s : table) arr.push_back(to_json(s));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "degree weight windowed dim rank_out rank_in h_dim\n";
        for (const auto& s : table)
            std::cout << s.degree << " " << s.weight << " " << (s.windowed ? "yes" : "no")
                      << " " << s.dim_flat << " " << s.rank_out << " " << s.rank_in
                      << " " << s.h_dim << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation-quantization engine"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts opts;
    app.add_option("--format", opts.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    int trunc_flag = -1, degree_flag = -1;
    app.add_option("--trunc", trunc_flag, "override truncation order N");
    app.add_option("--degree", degree_flag, "override degree bound D");
    app.add_option("--seed", opts.seed, "seed for randomized checks");
    app.add_option("--trials", opts.trials, "random trial count");

    std::string path, expr, f_str, g_str, suite;
    int weight = 4, deg_min = -2, deg_max = 0;
    bool deformed = false;

    CLI::App* rel = app.add_subcommand("relations", "print the deformed quotient relations");
    rel->add_option("problem", path, "problem file (JSON)")->required();

    CLI::App* nf = app.add_subcommand("normal-form", "normal form of an expression");
    nf->add_option("problem", path)->required();
    nf->add_option("expression", expr)->required();

    CLI::App* st = app.add_subcommand("star", "star product of two polynomials");
    st->add_option("problem", path)->required();
    st->add_option("f", f_str)->required();
    st->add_option("g", g_str)->required();

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("problem", path)->required();
    ver->add_option("--suite", suite, "constant|linear|quadratic|koszul|custom");

    CLI::App* coh = app.add_subcommand("cohomology", "cobar cohomology ranks");
    coh->add_option("problem", path)->required();
    coh->add_option("--weight", weight, "max weight");
    coh->add_option("--degree-min", deg_min);
    coh->add_option("--degree-max", deg_max);
    coh->add_flag("--deformed", deformed, "use the deformed differential");

    try {
        app.parse(argc, argv);
        if (trunc_flag >= 0) opts.trunc = trunc_flag;
        if (degree_flag >= 0) opts.degree = degree_flag;
        if (rel->parsed()) return cmd_relations(path, opts);
        if (nf->parsed()) return cmd_normal_form(path, expr, opts);
        if (st->parsed()) return cmd_star(path, f_str, g_str, opts);
        if (ver->parsed()) return cmd_verify(path, suite, opts);
        if (coh->parsed())
            return cmd_cohomology(path, weight, deg_min, deg_max, deformed, opts);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
