#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toric/kodaira.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

/// How the coefficient vector was specified in the problem file.
struct PolynomialSpec {
    std::optional<LaurentPolynomial> explicit_poly;
    bool generic = false;
    unsigned long seed = 1;
    long range = 9;
    // nullopt = all lattice points; "vertices" resolves at build time
    std::optional<std::vector<IntVec>> generic_support;
    bool vertices_only = false;
};

struct ProblemInput {
    size_t lattice_dim = 0;
    std::vector<IntVec> polytope_points;
    std::optional<PolynomialSpec> polynomial;
    std::optional<std::vector<IntVec>> subfamily;
};

/// Parses and schema-checks a problem file. Throws validation_error.
ProblemInput parse_problem(const Json& j);

struct ReportOptions {
    std::string section = "analyze";
    std::optional<MapVariant> map;  // restrict kernel blocks to one variant
    unsigned scale = 1;
    std::string input_hash;
    std::optional<unsigned long> seed_override;
    std::optional<long> range_override;
};

/// Runs the full pipeline and renders the requested report section.
Json build_report(const ProblemInput& input, const ReportOptions& options);

/// Flat deterministic `path = value` rendering with identical content.
std::string to_table(const Json& report);

std::string fnv1a64_hex(const std::string& bytes);

Json json_int(const Int& z);
Json json_int_vec(const IntVec& v);
Json json_rat_vec(const RatVec& v);
Json json_polynomial(const LaurentPolynomial& f);

}  // namespace toric
