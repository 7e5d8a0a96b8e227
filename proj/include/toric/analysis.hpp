#pragma once

#include <optional>

#include "toric/fine_interior.hpp"
#include "toric/roots.hpp"

namespace toric {

/**
 * Everything the kernel computations need about one polytope, computed once:
 * Fine interior, support, canonical closure, root sets, and lattice point
 * lists. closure/roots are absent when the Fine interior is empty.
 */
struct GeometryAnalysis {
    LatticePolytope delta;
    FineInteriorResult fine;
    std::optional<CanonicalClosureResult> closure;
    std::optional<RootComparison> roots;
    std::vector<IntVec> delta_points;     // polytope ∩ M
    std::vector<IntVec> interior_points;  // strict-interior lattice points
    std::vector<IntVec> closure_points;   // closure ∩ M (when closure is present)
};

GeometryAnalysis analyze_geometry(const LatticePolytope& delta, unsigned scale = 1);

}  // namespace toric
