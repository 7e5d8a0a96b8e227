#pragma once

#include <vector>

#include "toric/matrix.hpp"
#include "toric/vec.hpp"

namespace toric {

/// Closed halfspace {x : <x, normal> >= offset} with a primitive integer
/// normal; lattice polytopes additionally keep integral offsets.
struct Halfspace {
    IntVec normal;
    Rat offset;

    bool operator==(const Halfspace&) const = default;
};

bool halfspace_less(const Halfspace& a, const Halfspace& b);

/// Rescales so the normal is primitive. Throws on a zero normal.
Halfspace canonical_halfspace(IntVec normal, Rat offset);

/**
 * A face of a lattice polytope, carried as its vertex set together with the
 * tight facet inequalities, so membership tests need no recomputation.
 */
struct Face {
    int dim = -1;
    std::vector<IntVec> vertices;       // sorted subset of the parent's vertices
    std::vector<Halfspace> tight;       // all parent facets containing the face
    std::vector<Halfspace> container;   // the parent's H-representation

    bool contains(const IntVec& m) const;
};

/**
 * Intersection of rational halfspaces with exact vertex enumeration.
 *
 * The stored H-representation is recomputed from the vertex set, which makes
 * it canonical: facet inequalities of the polytope inside its affine hull
 * plus equality pairs cutting out the hull. dim() is -1 for the empty
 * polytope. A halfspace system whose normals do not positively span is
 * flagged unbounded; vertex data is then unavailable.
 */
class RationalHPolytope {
public:
    static RationalHPolytope from_halfspaces(size_t ambient_dim, const std::vector<Halfspace>& halfspaces);
    static RationalHPolytope from_vertices(size_t ambient_dim, std::vector<RatVec> verts);
    static RationalHPolytope empty(size_t ambient_dim);

    /// Cuts this (bounded) polytope by additional halfspaces.
    RationalHPolytope intersect(const std::vector<Halfspace>& extra) const;

    size_t ambient_dim() const { return ambient_dim_; }
    int dim() const;
    bool is_empty() const { return dim_ < 0; }
    bool is_bounded() const { return bounded_; }

    const std::vector<RatVec>& vertices() const;
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    std::vector<IntVec> facet_normals() const;

    /// min over the polytope of <., nu>, attained at a vertex.
    Rat min_support(const IntVec& nu) const;

    bool contains(const RatVec& x) const;
    bool contains(const IntVec& m) const;

    std::vector<IntVec> lattice_points() const;
    bool all_vertices_integral() const;

    bool operator==(const RationalHPolytope& other) const;

    RationalHPolytope() = default;

private:
    size_t ambient_dim_ = 0;
    int dim_ = -1;
    bool bounded_ = true;
    std::vector<RatVec> vertices_;
    std::vector<Halfspace> halfspaces_;
};

/**
 * Lattice polytope with both representations: sorted vertex list and the
 * facet system {x : <x, normal> >= b} with primitive inner normals and
 * integer offsets. Lower-dimensional hulls are legal and flagged via dim().
 */
class LatticePolytope {
public:
    static LatticePolytope hull(const std::vector<IntVec>& points);

    size_t ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_); }

    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    /// Primitive inner facet normals; the rays of the normal fan when full-dimensional.
    std::vector<IntVec> facet_normals() const;

    Int min_support(const IntVec& nu) const;
    bool contains(const IntVec& m) const;
    bool contains(const RatVec& x) const;

    std::vector<IntVec> lattice_points() const;
    std::vector<IntVec> interior_lattice_points() const;

    /// All k-dimensional faces in canonical (vertex-list) order.
    std::vector<Face> faces(int k) const;

    RationalHPolytope to_rational() const;

    bool operator==(const LatticePolytope& other) const {
        return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
    }

    LatticePolytope() = default;

private:
    size_t ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<IntVec> vertices_;
    std::vector<Halfspace> facets_;
};

struct ToricDivisorData {
    std::vector<IntVec> rays;       // pairwise distinct, primitive
    std::vector<Int> coefficients;  // a_i per ray
};

/// P_D = {x : <x, ray_i> >= -a_i}; unbounded systems come back flagged.
RationalHPolytope divisor_polytope(const ToricDivisorData& divisor);

/// True when the vectors positively span the ambient space.
bool positively_spans(const std::vector<IntVec>& vectors, size_t ambient_dim);

}  // namespace toric
