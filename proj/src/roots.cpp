#include "toric/roots.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

RaySet RaySet::create(size_t ambient_dim, std::vector<IntVec> rays, RayOrigin origin) {
    std::sort(rays.begin(), rays.end(), LexLess{});
    std::set<IntVec> seen;
    for (const IntVec& r : rays) {
        if (r.size() != ambient_dim) throw std::invalid_argument("ray dimension mismatch");
        if (is_zero(r) || primitive(r) != r)
            throw std::invalid_argument("rays must be nonzero and primitive");
        if (!seen.insert(r).second) throw std::invalid_argument("rays must be pairwise distinct");
    }
    if (!positively_spans(rays, ambient_dim))
        throw precondition_error("root polytope unbounded: rays do not positively span");
    return RaySet{ambient_dim, std::move(rays), origin};
}

bool root_less(const Root& a, const Root& b) { return lex_less(a.alpha, b.alpha); }

std::vector<Root> demazure_roots(const RaySet& rays) {
    const size_t n = rays.ambient_dim;
    std::vector<Root> out;
    for (size_t i = 0; i < rays.rays.size(); ++i) {
        const IntVec& ray = rays.rays[i];
        std::vector<Halfspace> hs;
        hs.push_back(Halfspace{ray, Rat(1)});
        hs.push_back(Halfspace{negate(ray), Rat(-1)});
        for (size_t j = 0; j < rays.rays.size(); ++j)
            if (j != i) hs.push_back(Halfspace{negate(rays.rays[j]), Rat(0)});
        const RationalHPolytope slab = RationalHPolytope::from_halfspaces(n, hs);
        if (!slab.is_bounded())
            throw precondition_error("root polytope unbounded: rays do not positively span");
        for (const IntVec& alpha : slab.lattice_points()) {
            if (pairing(alpha, ray) != 1) continue;
            bool root = true;
            for (size_t j = 0; j < rays.rays.size() && root; ++j)
                if (j != i && pairing(alpha, rays.rays[j]) > 0) root = false;
            if (root) out.push_back(Root{alpha, ray});
        }
    }
    std::sort(out.begin(), out.end(), root_less);
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].alpha == out[i - 1].alpha)
            throw std::logic_error("root with two distinguished rays");
    return out;
}

RootComparison root_set_difference(const LatticePolytope& delta, const FineInteriorResult& fi,
                                   const CanonicalClosureResult& closure) {
    if (fi.fine_interior.is_empty()) throw precondition_error("no Fine interior");
    const size_t n = delta.ambient_dim();
    RootComparison out;
    out.delta_roots = demazure_roots(
        RaySet::create(n, delta.facet_normals(), RayOrigin::normal_fan_delta));
    out.canonical_roots = demazure_roots(
        RaySet::create(n, closure.closure.facet_normals(), RayOrigin::normal_fan_canonical));
    const std::vector<Root> support_roots =
        demazure_roots(RaySet::create(n, fi.support, RayOrigin::support_set));
    out.support_equality = support_roots == out.canonical_roots;

    std::set<IntVec> canonical_alphas;
    for (const Root& r : out.canonical_roots) canonical_alphas.insert(r.alpha);
    for (const Root& r : out.delta_roots)
        if (!canonical_alphas.count(r.alpha))
            throw std::logic_error("root of the facet fan missing from the closure fan");
    std::set<IntVec> delta_alphas;
    for (const Root& r : out.delta_roots) delta_alphas.insert(r.alpha);
    for (const Root& r : out.canonical_roots)
        if (!delta_alphas.count(r.alpha)) out.difference.push_back(r);
    return out;
}

RootComparison root_set_difference(const LatticePolytope& delta) {
    const RationalHPolytope p = delta.to_rational();
    const FineInteriorResult fi = fine_interior(p, 1);
    if (fi.fine_interior.is_empty()) throw precondition_error("no Fine interior");
    return root_set_difference(delta, fi, canonical_closure(p, fi));
}

}  // namespace toric
