#pragma once

#include <vector>

#include "toric/fine_interior.hpp"
#include "toric/polytope.hpp"

namespace toric {

enum class RayOrigin { normal_fan_delta, normal_fan_canonical, support_set };

/// Primitive, pairwise distinct rays that positively span the ambient space.
struct RaySet {
    size_t ambient_dim = 0;
    std::vector<IntVec> rays;  // sorted
    RayOrigin origin = RayOrigin::normal_fan_delta;

    /// Validates the invariants; throws on a non-spanning or non-primitive set.
    static RaySet create(size_t ambient_dim, std::vector<IntVec> rays, RayOrigin origin);
};

/// A one-parameter direction alpha with <alpha, n(alpha)> = 1 and
/// <alpha, n_j> <= 0 for every other ray of the generating set.
struct Root {
    IntVec alpha;
    IntVec distinguished_ray;

    bool operator==(const Root&) const = default;
};

bool root_less(const Root& a, const Root& b);

/// All roots of the ray set, sorted by alpha.
std::vector<Root> demazure_roots(const RaySet& rays);

struct RootComparison {
    std::vector<Root> delta_roots;      // roots of the facet rays of the polytope
    std::vector<Root> canonical_roots;  // roots of the facet rays of its canonical closure
    std::vector<Root> difference;       // canonical minus delta
    bool support_equality = false;      // roots of the support set match canonical_roots
};

RootComparison root_set_difference(const LatticePolytope& delta, const FineInteriorResult& fi,
                                   const CanonicalClosureResult& closure);
RootComparison root_set_difference(const LatticePolytope& delta);

}  // namespace toric
