#include "toric/kodaira.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "toric/errors.hpp"
#include "toric/matrix.hpp"

namespace toric {

namespace {

template <typename ContainsFn>
Int height_impl(const std::vector<Halfspace>& halfspaces, const IntVec& alpha, const IntVec& m,
                ContainsFn&& contains) {
    if (!contains(m)) throw precondition_error("height: point lies outside the polytope");
    const Halfspace* facet = nullptr;
    for (const Halfspace& h : halfspaces) {
        const Int v = pairing(alpha, h.normal);
        if (v == 1) {
            if (facet && facet->normal != h.normal)
                throw precondition_error("height: direction is not a root of the facet rays");
            facet = &h;
        } else if (v > 0) {
            throw precondition_error("height: direction is not a root of the facet rays");
        }
    }
    if (!facet) throw precondition_error("height: direction is not a root of the facet rays");

    // Step count of the definition...
    Int steps = 0;
    IntVec cur = sub(m, alpha);
    while (contains(cur)) {
        ++steps;
        cur = sub(cur, alpha);
    }
    // ...must agree with the lattice distance from the distinguished facet.
    const Rat distance = Rat(pairing(m, facet->normal)) - facet->offset;
    if (distance != Rat(steps))
        throw std::logic_error("height: step count disagrees with the facet distance");
    return steps;
}

using MonomialIndex = std::map<IntVec, size_t, LexLess>;

MonomialIndex index_of(const std::vector<IntVec>& monomials) {
    MonomialIndex index;
    for (const IntVec& m : monomials) index.emplace(m, index.size());
    return index;
}

RatVec coefficient_vector(const LaurentPolynomial& f, const MonomialIndex& index) {
    RatVec out(index.size(), Rat(0));
    for (const auto& [m, a] : f.terms()) {
        const auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("polynomial support escapes the coordinate monomials");
        out[it->second] = a;
    }
    return out;
}

LaurentPolynomial polynomial_from_vector(const RatVec& row, const std::vector<IntVec>& monomials) {
    LaurentPolynomial out(monomials.empty() ? 0 : monomials.front().size());
    for (size_t i = 0; i < monomials.size(); ++i) out.add_term(monomials[i], row[i]);
    return out;
}

std::vector<RatVec> subspace_rows(const std::vector<IntVec>& points, const MonomialIndex& index) {
    std::vector<RatVec> rows;
    rows.reserve(points.size());
    for (const IntVec& m : points) {
        RatVec r(index.size(), Rat(0));
        r[index.at(m)] = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

const GeometryAnalysis& require_closure(const GeometryAnalysis& geometry) {
    if (!geometry.closure) throw precondition_error("no Fine interior");
    return geometry;
}

}  // namespace

Int height(const RationalHPolytope& q, const IntVec& alpha, const IntVec& m) {
    return height_impl(q.halfspaces(), alpha, m, [&](const IntVec& x) { return q.contains(x); });
}

Int height(const LatticePolytope& q, const IntVec& alpha, const IntVec& m) {
    return height_impl(q.facets(), alpha, m, [&](const IntVec& x) { return q.contains(x); });
}

LaurentPolynomial w_poly(const LaurentPolynomial& f, const Root& alpha,
                         const RationalHPolytope& closure) {
    LaurentPolynomial out(f.ambient_dim());
    for (const auto& [m, a] : f.terms()) {
        const Int h = height(closure, alpha.alpha, m);
        if (h != 0) out.add_term(sub(m, alpha.alpha), a * Rat(h));
    }
    return out;
}

LaurentPolynomial w_poly(const LatticePolytope& delta, const LaurentPolynomial& f,
                         const Root& alpha) {
    return w_poly(f, alpha, canonical_closure(delta).closure);
}

KernelReport kernel_basis(const GeometryAnalysis& geometry, const LaurentPolynomial& f,
                          MapVariant variant) {
    require_closure(geometry);
    if (f.is_zero() || newton_polytope(f) != geometry.delta)
        throw precondition_error("degenerate support: Newton polytope differs from the polytope");
    const size_t n = geometry.delta.ambient_dim();

    KernelReport report;
    report.variant = variant;
    report.flags.dim_at_least_two = n >= 2;
    report.flags.has_interior_point = !geometry.interior_points.empty();
    report.flags.surface_case_ok = n != 2 || geometry.interior_points.size() >= 2;

    for (size_t axis = 0; axis < n; ++axis) report.torus_part.push_back(toric_derivative(f, axis));

    const std::vector<Root>& roots = variant == MapVariant::ambient
                                         ? geometry.roots->canonical_roots
                                         : geometry.roots->delta_roots;
    for (const Root& r : roots)
        report.root_part.emplace_back(r, w_poly(f, r, geometry.closure->closure));

    const MonomialIndex index = index_of(geometry.closure_points);
    std::vector<RatVec> rows;
    rows.push_back(coefficient_vector(f, index));
    for (const LaurentPolynomial& t : report.torus_part) rows.push_back(coefficient_vector(t, index));
    for (const auto& [r, w] : report.root_part) rows.push_back(coefficient_vector(w, index));
    const size_t expected = 1 + n + roots.size();
    if (RatMatrix::from_rows(rows, index.size()).rank() != expected)
        throw degenerate_error("degenerate coefficient choice: kernel basis is not independent");
    report.independence_verified = true;

    report.kernel_dim = n + roots.size();
    report.kernel_dim_with_f = report.kernel_dim + 1;
    report.ambient_space_dim = (variant == MapVariant::ambient ? geometry.closure_points.size()
                                                               : geometry.delta_points.size()) -
                               1;
    report.moduli = Int(report.ambient_space_dim) - Int(report.kernel_dim);
    return report;
}

KernelReport kernel_basis(const LatticePolytope& delta, const LaurentPolynomial& f,
                          MapVariant variant) {
    return kernel_basis(analyze_geometry(delta), f, variant);
}

IntersectionCheck kernel_intersection_check(const GeometryAnalysis& geometry,
                                            const LaurentPolynomial& f) {
    require_closure(geometry);
    const KernelReport ambient = kernel_basis(geometry, f, MapVariant::ambient);
    const KernelReport family = kernel_basis(geometry, f, MapVariant::family);
    const MonomialIndex index = index_of(geometry.closure_points);

    auto span_rows = [&](const KernelReport& r) {
        std::vector<RatVec> rows;
        rows.push_back(coefficient_vector(f, index));
        for (const LaurentPolynomial& t : r.torus_part) rows.push_back(coefficient_vector(t, index));
        for (const auto& [root, w] : r.root_part) rows.push_back(coefficient_vector(w, index));
        return RatMatrix::from_rows(rows, index.size());
    };

    const RatMatrix ambient_span = span_rows(ambient);
    const RatMatrix family_span = span_rows(family);
    const RatMatrix newton_subspace =
        RatMatrix::from_rows(subspace_rows(geometry.delta_points, index), index.size());
    const RatMatrix intersected = span_intersection(ambient_span, newton_subspace);

    IntersectionCheck out;
    out.ambient_span_dim = ambient_span.rank();
    out.family_span_dim = family_span.rank();
    out.intersected_dim = intersected.rows();
    out.dimension_drop = out.ambient_span_dim - out.intersected_dim;
    out.matches = intersected.row_basis() == family_span.row_basis();
    return out;
}

IntersectionCheck kernel_intersection_check(const LatticePolytope& delta,
                                            const LaurentPolynomial& f) {
    return kernel_intersection_check(analyze_geometry(delta), f);
}

SubfamilyReport subfamily_analysis(const GeometryAnalysis& geometry, const LaurentPolynomial& f,
                                   std::vector<IntVec> points) {
    require_closure(geometry);
    std::sort(points.begin(), points.end(), LexLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const std::set<IntVec> lattice(geometry.delta_points.begin(), geometry.delta_points.end());
    for (const IntVec& p : points)
        if (!lattice.count(p))
            throw precondition_error("subfamily points must be lattice points of the polytope");
    const std::set<IntVec> point_set(points.begin(), points.end());
    for (const IntVec& v : geometry.delta.vertices())
        if (!point_set.count(v))
            throw precondition_error("subfamily must contain every vertex of the polytope");
    for (const IntVec& m : f.support())
        if (!point_set.count(m))
            throw precondition_error("polynomial support must lie inside the subfamily");

    const KernelReport family = kernel_basis(geometry, f, MapVariant::family);
    const MonomialIndex index = index_of(geometry.delta_points);

    std::vector<RatVec> rows;
    rows.push_back(coefficient_vector(f, index));
    for (const LaurentPolynomial& t : family.torus_part) rows.push_back(coefficient_vector(t, index));
    for (const auto& [root, w] : family.root_part) rows.push_back(coefficient_vector(w, index));
    const RatMatrix kernel_span = RatMatrix::from_rows(rows, index.size());
    const RatMatrix subspace =
        RatMatrix::from_rows(subspace_rows(points, index), index.size());
    const RatMatrix intersected = span_intersection(kernel_span, subspace);

    SubfamilyReport out;
    out.points = points;

    // Quotient by f: keep the intersection rows that stay independent of f.
    std::vector<RatVec> picked = {coefficient_vector(f, index)};
    for (size_t i = 0; i < intersected.rows(); ++i) {
        const RatVec row = intersected.row(i);
        std::vector<RatVec> trial = picked;
        trial.push_back(row);
        if (RatMatrix::from_rows(trial, index.size()).rank() == trial.size()) {
            picked = std::move(trial);
            out.kernel_basis.push_back(polynomial_from_vector(row, geometry.delta_points));
        }
    }
    out.moduli = Int(points.size()) - 1 - Int(out.kernel_basis.size());

    const size_t n = geometry.delta.ambient_dim();
    if (std::vector<IntVec>(points) == geometry.delta.vertices()) {
        bool vertex_on_next_plane = false;
        for (const Halfspace& facet : geometry.delta.facets()) {
            for (const IntVec& v : geometry.delta.vertices())
                if (Rat(pairing(v, facet.normal)) == facet.offset + 1) {
                    vertex_on_next_plane = true;
                    break;
                }
            if (vertex_on_next_plane) break;
        }
        if (!vertex_on_next_plane) {
            out.vertex_lemma_applicable = true;
            out.vertex_lemma_moduli = Int(points.size()) - Int(n) - 1;
        }
    }
    return out;
}

SubfamilyReport subfamily_analysis(const LatticePolytope& delta, const LaurentPolynomial& f,
                                   std::vector<IntVec> points) {
    return subfamily_analysis(analyze_geometry(delta), f, std::move(points));
}

LaurentPolynomial generic_sample(const LatticePolytope& delta,
                                 const std::optional<std::vector<IntVec>>& support_points,
                                 unsigned long seed, long range) {
    if (range < 1) throw std::invalid_argument("coefficient range must be >= 1");
    std::vector<IntVec> points;
    if (support_points) {
        points = *support_points;
        std::sort(points.begin(), points.end(), LexLess{});
        points.erase(std::unique(points.begin(), points.end()), points.end());
        const std::vector<IntVec> lattice = delta.lattice_points();
        const std::set<IntVec> lattice_set(lattice.begin(), lattice.end());
        for (const IntVec& p : points)
            if (!lattice_set.count(p))
                throw precondition_error("support points must be lattice points of the polytope");
        const std::set<IntVec> point_set(points.begin(), points.end());
        for (const IntVec& v : delta.vertices())
            if (!point_set.count(v))
                throw precondition_error("support must contain every vertex of the polytope");
    } else {
        points = delta.lattice_points();
    }

    std::mt19937_64 engine(seed);
    LaurentPolynomial f(delta.ambient_dim());
    const auto width = static_cast<unsigned long long>(2 * range);
    for (const IntVec& m : points) {
        const unsigned long long r = engine() % width;
        const long long value = r < static_cast<unsigned long long>(range)
                                    ? static_cast<long long>(r) - range
                                    : static_cast<long long>(r) - range + 1;
        f.add_term(m, Rat(static_cast<long>(value)));
    }
    return f;
}

}  // namespace toric
