#include "toric/analysis.hpp"

namespace toric {

GeometryAnalysis analyze_geometry(const LatticePolytope& delta, unsigned scale) {
    GeometryAnalysis out;
    out.delta = delta;
    const RationalHPolytope p = delta.to_rational();
    out.fine = fine_interior(p, scale);
    out.delta_points = delta.lattice_points();
    out.interior_points = delta.interior_lattice_points();
    if (!out.fine.fine_interior.is_empty()) {
        out.closure = canonical_closure(p, out.fine);
        out.roots = root_set_difference(delta, out.fine, *out.closure);
        out.closure_points = out.closure->closure.lattice_points();
    }
    return out;
}

}  // namespace toric
