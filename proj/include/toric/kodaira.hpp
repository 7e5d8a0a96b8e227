#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/analysis.hpp"
#include "toric/laurent.hpp"

namespace toric {

/// Lattice steps of -alpha that keep m inside q: max{k >= 0 : m - k*alpha in q}.
/// Cross-checked against the facet distance to the hyperplane distinguished by
/// alpha; a mismatch is a logic error.
Int height(const RationalHPolytope& q, const IntVec& alpha, const IntVec& m);
Int height(const LatticePolytope& q, const IntVec& alpha, const IntVec& m);

/// sum over m of ht_{-alpha}(m) * a_m * x^{m-alpha}, heights measured in `closure`.
LaurentPolynomial w_poly(const LaurentPolynomial& f, const Root& alpha,
                         const RationalHPolytope& closure);
LaurentPolynomial w_poly(const LatticePolytope& delta, const LaurentPolynomial& f,
                         const Root& alpha);

enum class MapVariant { ambient, family };

struct HypothesisFlags {
    bool dim_at_least_two = false;       // n >= 2
    bool has_interior_point = false;     // l*(Delta) > 0
    bool surface_case_ok = false;        // n = 2 implies l*(Delta) >= 2
    bool all_satisfied() const { return dim_at_least_two && has_interior_point && surface_case_ok; }
};

/**
 * Kernel basis of one deformation map: the n torus derivative polynomials
 * plus one distinguished polynomial per root of the variant's fan, with exact
 * bookkeeping of dimensions and moduli. Dimensions follow the projectivized
 * convention (modulo f); kernel_dim_with_f records the alternative count.
 */
struct KernelReport {
    MapVariant variant = MapVariant::family;
    std::vector<LaurentPolynomial> torus_part;
    std::vector<std::pair<Root, LaurentPolynomial>> root_part;
    size_t kernel_dim = 0;
    size_t kernel_dim_with_f = 0;
    size_t ambient_space_dim = 0;  // deformation parameter count for the variant
    Int moduli = 0;                // ambient_space_dim - kernel_dim
    HypothesisFlags flags;
    bool independence_verified = false;
};

KernelReport kernel_basis(const GeometryAnalysis& geometry, const LaurentPolynomial& f,
                          MapVariant variant);
KernelReport kernel_basis(const LatticePolytope& delta, const LaurentPolynomial& f,
                          MapVariant variant);

struct IntersectionCheck {
    bool matches = false;      // ambient kernel ∩ L(Delta) equals the family kernel (mod f)
    size_t ambient_span_dim = 0;
    size_t intersected_dim = 0;
    size_t family_span_dim = 0;
    size_t dimension_drop = 0;
};

IntersectionCheck kernel_intersection_check(const GeometryAnalysis& geometry,
                                            const LaurentPolynomial& f);
IntersectionCheck kernel_intersection_check(const LatticePolytope& delta,
                                            const LaurentPolynomial& f);

struct SubfamilyReport {
    std::vector<IntVec> points;                  // the coefficient subset A, sorted
    std::vector<LaurentPolynomial> kernel_basis; // basis of (family kernel ∩ L(A)) mod f
    Int moduli = 0;                              // (#A - 1) - dim of that basis
    bool vertex_lemma_applicable = false;
    std::optional<Int> vertex_lemma_moduli;
};

SubfamilyReport subfamily_analysis(const GeometryAnalysis& geometry, const LaurentPolynomial& f,
                                   std::vector<IntVec> points);
SubfamilyReport subfamily_analysis(const LatticePolytope& delta, const LaurentPolynomial& f,
                                   std::vector<IntVec> points);

/// Deterministic nonzero integer coefficients in [-range, range] on the
/// support A (all lattice points when A is not given).
LaurentPolynomial generic_sample(const LatticePolytope& delta,
                                 const std::optional<std::vector<IntVec>>& support_points,
                                 unsigned long seed, long range);

}  // namespace toric
