#include "toric/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

IntVec parse_int_vec(const Json& j, size_t expected_dim, const char* what) {
    if (!j.is_array() || j.size() != expected_dim)
        throw validation_error(std::string(what) + ": expected an integer array of length " +
                               std::to_string(expected_dim));
    IntVec out;
    out.reserve(expected_dim);
    for (const Json& x : j) {
        if (x.is_number_integer())
            out.emplace_back(static_cast<long>(x.get<long long>()));
        else if (x.is_string())
            out.emplace_back(x.get<std::string>());
        else
            throw validation_error(std::string(what) + ": coordinates must be integers");
    }
    return out;
}

std::vector<IntVec> parse_point_list(const Json& j, size_t dim, const char* what) {
    if (!j.is_array() || j.empty())
        throw validation_error(std::string(what) + ": expected a non-empty list of points");
    std::vector<IntVec> out;
    out.reserve(j.size());
    for (const Json& p : j) out.push_back(parse_int_vec(p, dim, what));
    return out;
}

std::string variant_name(MapVariant v) {
    return v == MapVariant::ambient ? "ambient" : "family";
}

Json json_root(const Root& r) {
    Json j;
    j["alpha"] = json_int_vec(r.alpha);
    j["ray"] = json_int_vec(r.distinguished_ray);
    return j;
}

Json json_halfspace(const Halfspace& h) {
    Json j;
    j["normal"] = json_int_vec(h.normal);
    j["offset"] = rat_to_string(h.offset);
    return j;
}

Json json_point_list(const std::vector<IntVec>& pts) {
    Json j = Json::array();
    for (const IntVec& p : pts) j.push_back(json_int_vec(p));
    return j;
}

Json json_rat_point_list(const std::vector<RatVec>& pts) {
    Json j = Json::array();
    for (const RatVec& p : pts) j.push_back(json_rat_vec(p));
    return j;
}

Json kernel_block(const KernelReport& r, bool full) {
    Json j;
    j["variant"] = variant_name(r.variant);
    j["kernel_dim"] = r.kernel_dim;
    j["kernel_dim_with_f"] = r.kernel_dim_with_f;
    j["ambient_space_dim"] = r.ambient_space_dim;
    j["moduli"] = json_int(r.moduli);
    j["hypothesis_flags"] = Json{{"dim_at_least_two", r.flags.dim_at_least_two},
                                 {"has_interior_point", r.flags.has_interior_point},
                                 {"surface_case_ok", r.flags.surface_case_ok}};
    j["independence_verified"] = r.independence_verified;
    if (full) {
        Json torus = Json::array();
        for (const LaurentPolynomial& t : r.torus_part) torus.push_back(json_polynomial(t));
        j["torus_part"] = std::move(torus);
        Json roots = Json::array();
        for (const auto& [root, w] : r.root_part) {
            Json entry = json_root(root);
            entry["w"] = json_polynomial(w);
            roots.push_back(std::move(entry));
        }
        j["root_part"] = std::move(roots);
    }
    return j;
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        if (j.empty()) out += prefix + " = []\n";
    } else {
        out += prefix + " = " + j.dump() + "\n";
    }
}

}  // namespace

Json json_int(const Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Json json_int_vec(const IntVec& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(json_int(x));
    return j;
}

Json json_rat_vec(const RatVec& v) {
    Json j = Json::array();
    for (const Rat& x : v) j.push_back(rat_to_string(x));
    return j;
}

Json json_polynomial(const LaurentPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [m, a] : f.terms()) {
        Json t;
        t["exponent"] = json_int_vec(m);
        t["coeff"] = rat_to_string(a);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

ProblemInput parse_problem(const Json& j) {
    if (!j.is_object()) throw validation_error("problem file must be a JSON object");
    ProblemInput input;
    if (!j.contains("lattice_dim") || !j["lattice_dim"].is_number_integer())
        throw validation_error("lattice_dim: required integer field");
    const long long dim = j["lattice_dim"].get<long long>();
    if (dim < 1 || dim > 16) throw validation_error("lattice_dim: expected 1 <= n <= 16");
    input.lattice_dim = static_cast<size_t>(dim);

    if (!j.contains("polytope") || !j["polytope"].is_object())
        throw validation_error("polytope: required object with 'vertices' or 'points'");
    const Json& poly = j["polytope"];
    if (poly.contains("vertices"))
        input.polytope_points = parse_point_list(poly["vertices"], input.lattice_dim, "polytope.vertices");
    else if (poly.contains("points"))
        input.polytope_points = parse_point_list(poly["points"], input.lattice_dim, "polytope.points");
    else
        throw validation_error("polytope: expected 'vertices' or 'points'");

    if (j.contains("polynomial")) {
        const Json& pj = j["polynomial"];
        PolynomialSpec spec;
        if (pj.contains("terms")) {
            if (!pj["terms"].is_array() || pj["terms"].empty())
                throw validation_error("polynomial.terms: expected a non-empty array");
            LaurentPolynomial f(input.lattice_dim);
            for (const Json& t : pj["terms"]) {
                if (!t.is_object() || !t.contains("exponent") || !t.contains("coeff"))
                    throw validation_error("polynomial.terms: entries need 'exponent' and 'coeff'");
                const IntVec m = parse_int_vec(t["exponent"], input.lattice_dim, "polynomial exponent");
                if (!t["coeff"].is_string())
                    throw validation_error("polynomial coeff: expected a rational string \"p/q\"");
                Rat a;
                try {
                    a = parse_rat(t["coeff"].get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw validation_error(e.what());
                }
                if (a == 0) throw validation_error("polynomial coeff: zero coefficient listed");
                f.add_term(m, a);
            }
            spec.explicit_poly = std::move(f);
        } else if (pj.contains("generic")) {
            const Json& g = pj["generic"];
            if (!g.is_object()) throw validation_error("polynomial.generic: expected an object");
            spec.generic = true;
            if (g.contains("seed")) {
                if (!g["seed"].is_number_integer() || g["seed"].get<long long>() < 0)
                    throw validation_error("polynomial.generic.seed: expected a non-negative integer");
                spec.seed = g["seed"].get<unsigned long>();
            }
            if (g.contains("range")) {
                if (!g["range"].is_number_integer() || g["range"].get<long long>() < 1)
                    throw validation_error("polynomial.generic.range: expected an integer >= 1");
                spec.range = g["range"].get<long>();
            }
            if (g.contains("support")) {
                if (g["support"].is_string()) {
                    const std::string s = g["support"].get<std::string>();
                    if (s == "vertices")
                        spec.vertices_only = true;
                    else if (s != "all")
                        throw validation_error("polynomial.generic.support: \"all\", \"vertices\" or a point list");
                } else {
                    spec.generic_support =
                        parse_point_list(g["support"], input.lattice_dim, "polynomial.generic.support");
                }
            }
        } else {
            throw validation_error("polynomial: expected 'terms' or 'generic'");
        }
        input.polynomial = std::move(spec);
    }

    if (j.contains("subfamily"))
        input.subfamily = parse_point_list(j["subfamily"], input.lattice_dim, "subfamily");
    return input;
}

Json build_report(const ProblemInput& input, const ReportOptions& options) {
    const LatticePolytope delta = LatticePolytope::hull(input.polytope_points);
    const GeometryAnalysis geometry = analyze_geometry(delta, options.scale);

    const bool wants_kernel = options.section == "analyze" || options.section == "kernel" ||
                              options.section == "moduli" || options.section == "subfamily";

    // Resolve the polynomial when a kernel-flavoured section needs one.
    std::optional<LaurentPolynomial> f;
    PolynomialSpec spec;
    if (input.polynomial) spec = *input.polynomial;
    if (options.seed_override) {
        spec.generic = spec.generic || !spec.explicit_poly;
        spec.seed = *options.seed_override;
    }
    if (options.range_override) {
        spec.generic = spec.generic || !spec.explicit_poly;
        spec.range = *options.range_override;
    }
    const bool have_spec = spec.explicit_poly.has_value() || spec.generic;
    if (wants_kernel && have_spec) {
        if (spec.explicit_poly) {
            const std::vector<IntVec>& pts = geometry.delta_points;
            const std::set<IntVec> lattice(pts.begin(), pts.end());
            for (const IntVec& m : spec.explicit_poly->support())
                if (!lattice.count(m))
                    throw validation_error("polynomial support must lie inside the polytope");
            f = spec.explicit_poly;
        } else {
            std::optional<std::vector<IntVec>> support_points;
            if (spec.vertices_only) support_points = delta.vertices();
            if (spec.generic_support) support_points = spec.generic_support;
            f = generic_sample(delta, support_points, spec.seed, spec.range);
        }
    }

    Json report;
    report["tool"] = "toric-moduli";
    report["format_version"] = 1;
    report["input_hash"] = options.input_hash;
    report["section"] = options.section;
    report["candidate_scale"] = options.scale;
    report["lattice_dim"] = delta.ambient_dim();

    const auto polytope_block = [&] {
        Json b;
        b["dim"] = delta.dim();
        b["vertices"] = json_point_list(delta.vertices());
        Json facets = Json::array();
        for (const Halfspace& h : delta.facets()) facets.push_back(json_halfspace(h));
        b["facets"] = std::move(facets);
        return b;
    };

    const auto lattice_block = [&] {
        Json b;
        b["lattice_points"] = json_point_list(geometry.delta_points);
        b["count"] = geometry.delta_points.size();
        b["interior_lattice_points"] = json_point_list(geometry.interior_points);
        b["interior_count"] = geometry.interior_points.size();
        return b;
    };

    const auto fine_block = [&] {
        Json b;
        const RationalHPolytope& fine = geometry.fine.fine_interior;
        b["dim"] = fine.is_empty() ? -1 : fine.dim();
        b["vertices"] = fine.is_empty() ? Json::array() : json_rat_point_list(fine.vertices());
        b["support"] = json_point_list(geometry.fine.support);
        b["candidate_count"] = geometry.fine.candidate_normals.size();
        return b;
    };

    const auto closure_block = [&]() -> Json {
        if (!geometry.closure) return Json();
        Json b;
        const CanonicalClosureResult& c = *geometry.closure;
        b["dim"] = c.closure.dim();
        b["vertices"] = json_rat_point_list(c.closure.vertices());
        Json facets = Json::array();
        for (const Halfspace& h : c.closure.halfspaces()) facets.push_back(json_halfspace(h));
        b["facets"] = std::move(facets);
        b["is_lattice"] = c.is_lattice;
        b["is_cartier"] = c.is_lattice;
        b["extra_vertices"] = json_rat_point_list(c.extra_vertices);
        b["lattice_point_count"] = geometry.closure_points.size();
        return b;
    };

    const auto roots_block = [&]() -> Json {
        if (!geometry.roots) return Json();
        Json b;
        const RootComparison& rc = *geometry.roots;
        Json del = Json::array(), can = Json::array(), diff = Json::array();
        for (const Root& r : rc.delta_roots) del.push_back(json_root(r));
        for (const Root& r : rc.canonical_roots) can.push_back(json_root(r));
        for (const Root& r : rc.difference) diff.push_back(json_root(r));
        b["delta"] = std::move(del);
        b["delta_count"] = rc.delta_roots.size();
        b["canonical"] = std::move(can);
        b["canonical_count"] = rc.canonical_roots.size();
        b["difference"] = std::move(diff);
        b["support_equality"] = rc.support_equality;
        return b;
    };

    const auto polynomial_block = [&]() -> Json {
        Json b = json_polynomial(*f);
        if (!spec.explicit_poly) {
            b["generic"] = Json{{"seed", spec.seed}, {"range", spec.range}};
            if (spec.vertices_only)
                b["generic"]["support"] = "vertices";
            else if (spec.generic_support)
                b["generic"]["support"] = json_point_list(*spec.generic_support);
            else
                b["generic"]["support"] = "all";
        }
        return b;
    };

    const auto kernel_blocks = [&](bool full) {
        Json arr = Json::array();
        const bool both = !options.map.has_value();
        if (both || *options.map == MapVariant::family)
            arr.push_back(kernel_block(kernel_basis(geometry, *f, MapVariant::family), full));
        if (both || *options.map == MapVariant::ambient)
            arr.push_back(kernel_block(kernel_basis(geometry, *f, MapVariant::ambient), full));
        return arr;
    };

    const auto intersection_block = [&] {
        const IntersectionCheck c = kernel_intersection_check(geometry, *f);
        Json b;
        b["matches"] = c.matches;
        b["ambient_span_dim"] = c.ambient_span_dim;
        b["intersected_dim"] = c.intersected_dim;
        b["family_span_dim"] = c.family_span_dim;
        b["dimension_drop"] = c.dimension_drop;
        return b;
    };

    const auto subfamily_block = [&] {
        const SubfamilyReport r = subfamily_analysis(geometry, *f, *input.subfamily);
        Json b;
        b["points"] = json_point_list(r.points);
        b["point_count"] = r.points.size();
        Json basis = Json::array();
        for (const LaurentPolynomial& p : r.kernel_basis) basis.push_back(json_polynomial(p));
        b["kernel_basis"] = std::move(basis);
        b["moduli"] = json_int(r.moduli);
        b["vertex_lemma_applicable"] = r.vertex_lemma_applicable;
        if (r.vertex_lemma_moduli) b["vertex_lemma_moduli"] = json_int(*r.vertex_lemma_moduli);
        return b;
    };

    const std::string& section = options.section;
    if (section == "facets") {
        report["polytope"] = polytope_block();
    } else if (section == "lattice-points") {
        report["polytope"] = lattice_block();
    } else if (section == "fine-interior") {
        report["fine_interior"] = fine_block();
    } else if (section == "support") {
        if (geometry.fine.fine_interior.is_empty()) throw precondition_error("no Fine interior");
        report["support"] = json_point_list(geometry.fine.support);
    } else if (section == "canonical-closure") {
        if (!geometry.closure) throw precondition_error("no Fine interior");
        report["canonical_closure"] = closure_block();
    } else if (section == "roots") {
        if (!geometry.roots) throw precondition_error("no Fine interior");
        report["roots"] = roots_block();
    } else if (section == "kernel" || section == "moduli") {
        if (!f) throw validation_error("kernel sections need a polynomial (terms, generic, or --seed)");
        if (!geometry.closure) throw precondition_error("no Fine interior");
        report["polynomial"] = polynomial_block();
        report["kernel"] = kernel_blocks(section == "kernel");
        if (!options.map && section == "kernel")
            report["kernel_intersection"] = intersection_block();
    } else if (section == "subfamily") {
        if (!f) throw validation_error("subfamily analysis needs a polynomial");
        if (!input.subfamily) throw validation_error("subfamily analysis needs a 'subfamily' point list");
        if (!geometry.closure) throw precondition_error("no Fine interior");
        report["polynomial"] = polynomial_block();
        report["subfamily"] = subfamily_block();
    } else if (section == "analyze") {
        report["polytope"] = polytope_block();
        report["polytope"]["lattice_point_count"] = geometry.delta_points.size();
        report["polytope"]["interior_lattice_points"] = json_point_list(geometry.interior_points);
        report["polytope"]["interior_count"] = geometry.interior_points.size();
        report["fine_interior"] = fine_block();
        report["canonical_closure"] = closure_block();
        report["roots"] = roots_block();
        if (f) {
            if (!geometry.closure) throw precondition_error("no Fine interior");
            report["polynomial"] = polynomial_block();
            report["kernel"] = kernel_blocks(true);
            if (!options.map) report["kernel_intersection"] = intersection_block();
            if (input.subfamily) report["subfamily"] = subfamily_block();
        }
    } else {
        throw validation_error("unknown section: " + section);
    }
    return report;
}

std::string to_table(const Json& report) {
    std::string out;
    flatten(report, "", out);
    return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

}  // namespace toric
