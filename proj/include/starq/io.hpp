#ifndef STARQ_IO_HPP
#define STARQ_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "starq/ainfty.hpp"
#include "starq/cobar.hpp"
#include "starq/poisson.hpp"
#include "starq/rewrite.hpp"

namespace starq {

// Canonical serialized form: object keys sorted, rationals as "p/q" strings.
using Json = nlohmann::json;

// ---- canonical text form ----------------------------------------------
//
// Terms are printed by descending degree, ascending lexicographic order
// within a degree. Coefficients print as rationals "p/q", h-powers as "h",
// "h^2", ...; multi-term coefficients are parenthesized: "(1 - 1/2*h)".
// Every printed form re-parses to an equal value.

std::string describe(const HSeries& c);
std::string describe(const SymPoly& p,
                     const std::vector<std::string>& names = {});
std::string describe(const NCPoly& p,
                     const std::vector<std::string>& names = {});
std::string describe(const ExtElement& e);
std::string describe(const CobarElement& e);

std::vector<std::string> default_generator_names(int dim);

// ---- expression parsing -------------------------------------------------
//
// Grammar: rational and integer literals, generator names, "h", + - * / ^,
// parentheses; whitespace-insensitive. '/' divides by an invertible scalar.
// Errors carry the offending column.

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t column)
        : std::runtime_error(msg + " (column " + std::to_string(column + 1) + ")"),
          column(column) {}
    size_t column;
};

NCPoly parse_ncpoly(const std::string& text, int dim, int trunc,
                    const std::vector<std::string>& names = {});
SymPoly parse_sympoly(const std::string& text, int dim, int trunc,
                      const std::vector<std::string>& names = {});

// ---- canonical JSON form --------------------------------------------------

Json to_json(const HSeries& c);
Json to_json(const SymPoly& p);
Json to_json(const NCPoly& p);
Json to_json(const ExtElement& e);
Json to_json(const PoissonBivector& pi);
Json to_json(const TaylorComponents& tc);
Json to_json(const AInftyInstance& inst);
Json to_json(const RewriteSystem& sys);
Json to_json(const CohomologySlot& slot);

HSeries hseries_from_json(const Json& j, int trunc);
SymPoly sympoly_from_json(const Json& j);
NCPoly ncpoly_from_json(const Json& j);
ExtElement ext_from_json(const Json& j);
TaylorComponents taylor_from_json(const Json& j);
AInftyInstance instance_from_json(const Json& j);
RewriteSystem rewrite_system_from_json(const Json& j);

// ---- problem files --------------------------------------------------------
//
// {
//   "dim": 3,
//   "trunc": 4,                    // optional, default 4
//   "degree": 8,                   // optional, default 8
//   "generators": ["x1","x2","x3"],// optional
//   "poisson": [{"i":1,"j":2,"entry":"x3"}, ...],  // upper entries, i < j
//   "suite": "linear",             // optional: constant|linear|quadratic|koszul
//   "max_weight": 4,               // optional koszul window bound
//   "instance": { ... }            // optional custom Taylor components
// }

struct ProblemFile {
    int dim = 0;
    int trunc = 4;
    int degree = 8;
    std::vector<std::string> names;
    std::optional<PoissonBivector> poisson;
    std::string suite;  // empty: infer from the structure class
    int max_weight = 4;
    std::optional<AInftyInstance> custom_instance;
};

ProblemFile load_problem(const Json& j);
ProblemFile load_problem_file(const std::string& path);

}  // namespace starq

#endif
