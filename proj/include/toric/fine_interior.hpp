#pragma once

#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/**
 * The polytope cut one lattice step inside every supporting halfspace,
 * together with the candidate directions used and the support directions
 * whose pushed hyperplane touches the result.
 */
struct FineInteriorResult {
    RationalHPolytope fine_interior;        // possibly empty (dim -1) or lower-dimensional
    std::vector<IntVec> candidate_normals;  // working set of directions
    std::vector<IntVec> support;            // primitive nu with Min_F(nu) = Min_P(nu) + 1
    unsigned scale = 1;
};

struct CanonicalClosureResult {
    RationalHPolytope closure;
    bool is_lattice = false;
    std::vector<RatVec> extra_vertices;  // vertices of the closure outside the input polytope
};

/// Nonzero lattice points of scale * conv(facet rays ∪ {0}).
std::vector<IntVec> candidate_normals(const RationalHPolytope& p, unsigned scale = 1);
std::vector<IntVec> candidate_normals(const LatticePolytope& delta, unsigned scale = 1);

FineInteriorResult fine_interior(const RationalHPolytope& p, unsigned scale = 1);
FineInteriorResult fine_interior(const LatticePolytope& delta, unsigned scale = 1);

/// Support directions of the Fine interior. Throws when it is empty.
std::vector<IntVec> support(const LatticePolytope& delta);

/// Certifies that enlarging the candidate set leaves the Fine interior unchanged.
bool fine_interior_stable(const LatticePolytope& delta);

CanonicalClosureResult canonical_closure(const RationalHPolytope& p, const FineInteriorResult& fi);
CanonicalClosureResult canonical_closure(const LatticePolytope& delta);

/// True when every vertex of the canonical closure is a lattice point.
bool is_cartier(const LatticePolytope& delta);

}  // namespace toric
