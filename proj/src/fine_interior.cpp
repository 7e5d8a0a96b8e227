#include "toric/fine_interior.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

void require_solid(const RationalHPolytope& p) {
    if (!p.is_bounded()) throw precondition_error("fine interior of an unbounded polyhedron");
    if (p.is_empty()) throw precondition_error("fine interior of the empty polytope");
    if (p.dim() != static_cast<int>(p.ambient_dim()))
        throw precondition_error("fine interior requires a full-dimensional polytope");
}

}  // namespace

std::vector<IntVec> candidate_normals(const RationalHPolytope& p, unsigned scale) {
    require_solid(p);
    if (scale < 1) throw std::invalid_argument("candidate scale must be >= 1");
    const size_t n = p.ambient_dim();
    std::vector<IntVec> points;
    points.emplace_back(n, Int(0));
    for (const IntVec& ray : p.facet_normals()) {
        IntVec scaled(n);
        for (size_t i = 0; i < n; ++i) scaled[i] = Int(scale) * ray[i];
        points.push_back(std::move(scaled));
    }
    const LatticePolytope q = LatticePolytope::hull(points);
    std::vector<IntVec> out;
    for (const IntVec& m : q.lattice_points())
        if (!is_zero(m)) out.push_back(m);
    return out;
}

std::vector<IntVec> candidate_normals(const LatticePolytope& delta, unsigned scale) {
    return candidate_normals(delta.to_rational(), scale);
}

FineInteriorResult fine_interior(const RationalHPolytope& p, unsigned scale) {
    FineInteriorResult out;
    out.scale = scale;
    out.candidate_normals = candidate_normals(p, scale);
    std::vector<Halfspace> cuts;
    cuts.reserve(out.candidate_normals.size());
    for (const IntVec& nu : out.candidate_normals)
        cuts.push_back(Halfspace{nu, p.min_support(nu) + 1});
    out.fine_interior = p.intersect(cuts);
    if (!out.fine_interior.is_empty()) {
        for (const IntVec& nu : out.candidate_normals) {
            if (primitive(nu) != nu) continue;
            if (out.fine_interior.min_support(nu) == p.min_support(nu) + 1)
                out.support.push_back(nu);
        }
    }
    return out;
}

FineInteriorResult fine_interior(const LatticePolytope& delta, unsigned scale) {
    return fine_interior(delta.to_rational(), scale);
}

std::vector<IntVec> support(const LatticePolytope& delta) {
    FineInteriorResult fi = fine_interior(delta);
    if (fi.fine_interior.is_empty()) throw precondition_error("no Fine interior");
    return fi.support;
}

bool fine_interior_stable(const LatticePolytope& delta) {
    const RationalHPolytope p = delta.to_rational();
    return fine_interior(p, 1).fine_interior == fine_interior(p, 2).fine_interior;
}

CanonicalClosureResult canonical_closure(const RationalHPolytope& p, const FineInteriorResult& fi) {
    if (fi.fine_interior.is_empty()) throw precondition_error("no Fine interior");
    std::vector<Halfspace> hs;
    hs.reserve(fi.support.size());
    for (const IntVec& nu : fi.support) hs.push_back(Halfspace{nu, p.min_support(nu)});
    CanonicalClosureResult out;
    out.closure = RationalHPolytope::from_halfspaces(p.ambient_dim(), hs);
    if (!out.closure.is_bounded())
        throw precondition_error("canonical closure came out unbounded; support set is degenerate");
    out.is_lattice = out.closure.all_vertices_integral();
    for (const RatVec& v : out.closure.vertices())
        if (!p.contains(v)) out.extra_vertices.push_back(v);
    return out;
}

CanonicalClosureResult canonical_closure(const LatticePolytope& delta) {
    const RationalHPolytope p = delta.to_rational();
    return canonical_closure(p, fine_interior(p, 1));
}

bool is_cartier(const LatticePolytope& delta) { return canonical_closure(delta).is_lattice; }

}  // namespace toric
