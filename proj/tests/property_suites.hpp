#pragma once

// Randomized invariant suites over small polytopes in dimensions 2-4. Each
// suite runs a fixed number of deterministic instances and reports the first
// failure; they back both the doctest target and the acceptance runner.

#include <functional>
#include <set>
#include <string>

#include "test_util.hpp"
#include "toric/errors.hpp"

namespace testutil {

struct SuiteResult {
    size_t instances = 0;
    size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

inline void record(SuiteResult& r, bool pass, const std::string& what) {
    if (pass) return;
    ++r.failures;
    if (r.first_failure.empty()) r.first_failure = what;
}

inline size_t dim_for(size_t index) { return 2 + index % 3; }  // cycle 2,3,4

/// V->H->V and H->V->H round trips reproduce the polytope exactly.
inline SuiteResult suite_duality_round_trip(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(1000 + i);
        const LatticePolytope p = random_polytope(rng, dim_for(i));
        const LatticePolytope again = LatticePolytope::hull(p.vertices());
        record(result, again == p && again.facets() == p.facets(),
               "hull(vertices(hull(S))) changed the polytope, instance " + std::to_string(i));
        const RationalHPolytope from_h =
            RationalHPolytope::from_halfspaces(p.ambient_dim(), p.facets());
        std::vector<RatVec> expected;
        for (const IntVec& v : p.vertices()) expected.push_back(to_rat(v));
        record(result, from_h.is_bounded() && from_h.vertices() == expected,
               "vertex enumeration of the facet system disagrees, instance " + std::to_string(i));
    }
    return result;
}

/// Step-count heights agree with an independent membership walk (the library
/// additionally cross-checks the facet-distance formula internally).
inline SuiteResult suite_height_agreement(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(2000 + i);
        const LatticePolytope p = random_polytope_with_fine_interior(rng, dim_for(i));
        const GeometryAnalysis g = analyze_geometry(p);
        if (g.roots->canonical_roots.empty() || g.closure_points.empty()) continue;
        const RationalHPolytope& c = g.closure->closure;
        const Root& root =
            g.roots->canonical_roots[rng.engine() % g.roots->canonical_roots.size()];
        const IntVec& m = g.closure_points[rng.engine() % g.closure_points.size()];
        Int steps = 0;
        IntVec cur = sub(m, root.alpha);
        while (c.contains(cur)) {
            ++steps;
            cur = sub(cur, root.alpha);
        }
        record(result, height(c, root.alpha, m) == steps,
               "height disagrees with the membership walk, instance " + std::to_string(i));
    }
    return result;
}

/// Roots of the polytope's own fan keep the distinguished polynomials inside
/// the polytope's monomial space.
inline SuiteResult suite_support_containment(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(3000 + i);
        const LatticePolytope p = random_polytope_with_fine_interior(rng, dim_for(i));
        const GeometryAnalysis g = analyze_geometry(p);
        const LaurentPolynomial f = generic_sample(p, std::nullopt, 77 + i, 9);
        for (const Root& r : g.roots->delta_roots) {
            const LaurentPolynomial w = w_poly(f, r, g.closure->closure);
            for (const IntVec& m : w.support())
                record(result, p.contains(m),
                       "family distinguished polynomial escaped the polytope, instance " +
                           std::to_string(i));
        }
    }
    return result;
}

/// Roots gained by the canonical closure push some monomial outside.
inline SuiteResult suite_support_escape(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(4000 + i);
        const LatticePolytope p = random_polytope_with_fine_interior(rng, dim_for(i));
        const GeometryAnalysis g = analyze_geometry(p);
        const LaurentPolynomial f = generic_sample(p, std::nullopt, 99 + i, 9);
        for (const Root& r : g.roots->difference) {
            const LaurentPolynomial w = w_poly(f, r, g.closure->closure);
            bool escaped = false;
            for (const IntVec& m : w.support())
                if (!p.contains(m)) escaped = true;
            record(result, escaped,
                   "closure-only root stayed inside the polytope, instance " + std::to_string(i));
        }
    }
    return result;
}

/// The closure-only distinguished polynomials are independent modulo the
/// polytope's monomial space.
inline SuiteResult suite_quotient_independence(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(5000 + i);
        const LatticePolytope p = random_polytope_with_fine_interior(rng, dim_for(i));
        const GeometryAnalysis g = analyze_geometry(p);
        const LaurentPolynomial f = generic_sample(p, std::nullopt, 1234 + i, 9);
        if (g.roots->difference.empty()) continue;
        std::map<IntVec, size_t, LexLess> index;
        std::vector<IntVec> outside;
        for (const IntVec& m : g.closure_points)
            if (!p.contains(m)) {
                index.emplace(m, outside.size());
                outside.push_back(m);
            }
        std::vector<RatVec> rows;
        for (const Root& r : g.roots->difference) {
            RatVec row(outside.size(), Rat(0));
            for (const auto& [m, a] : w_poly(f, r, g.closure->closure).terms()) {
                const auto it = index.find(m);
                if (it != index.end()) row[it->second] = a;
            }
            rows.push_back(std::move(row));
        }
        const size_t rank = RatMatrix::from_rows(rows, outside.size()).rank();
        record(result, rank == g.roots->difference.size(),
               "quotient images of the extra distinguished polynomials are dependent, instance " +
                   std::to_string(i));
    }
    return result;
}

/// Root sets: facet-fan roots embed into closure-fan roots, and the support
/// directions generate the same roots as the closure facets.
inline SuiteResult suite_root_set_comparison(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(6000 + i);
        const LatticePolytope p = random_polytope_with_fine_interior(rng, dim_for(i));
        const GeometryAnalysis g = analyze_geometry(p);
        std::set<IntVec> canonical;
        for (const Root& r : g.roots->canonical_roots) canonical.insert(r.alpha);
        bool included = true;
        for (const Root& r : g.roots->delta_roots)
            if (!canonical.count(r.alpha)) included = false;
        record(result, included, "facet-fan root missing from closure roots, instance " +
                                     std::to_string(i));
        record(result, g.roots->support_equality,
               "support-set roots differ from closure roots, instance " + std::to_string(i));
    }
    return result;
}

/// Enlarging the candidate direction set does not move the Fine interior.
inline SuiteResult suite_fine_interior_stability(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(7000 + i);
        const LatticePolytope p = random_polytope(rng, dim_for(i));
        record(result, fine_interior_stable(p),
               "fine interior moved at candidate scale 2, instance " + std::to_string(i));
    }
    return result;
}

/// {f, x_i df/dx_i} has rank n+1 for generic coefficients on a full-dimensional
/// polytope.
inline SuiteResult suite_torus_rank(size_t instances) {
    SuiteResult result;
    for (size_t i = 0; i < instances; ++i) {
        ++result.instances;
        InstanceRng rng(8000 + i);
        const size_t dim = dim_for(i);
        const LatticePolytope p = random_polytope(rng, dim);
        const LaurentPolynomial f = generic_sample(p, std::nullopt, 31 + i, 9);
        std::map<IntVec, size_t, LexLess> index;
        const std::vector<IntVec> pts = p.lattice_points();
        for (const IntVec& m : pts) index.emplace(m, index.size());
        std::vector<RatVec> rows;
        const auto row_of = [&](const LaurentPolynomial& q) {
            RatVec row(pts.size(), Rat(0));
            for (const auto& [m, a] : q.terms()) row[index.at(m)] = a;
            return row;
        };
        rows.push_back(row_of(f));
        for (size_t axis = 0; axis < dim; ++axis) rows.push_back(row_of(toric_derivative(f, axis)));
        record(result, RatMatrix::from_rows(rows, pts.size()).rank() == dim + 1,
               "torus derivative family dropped rank, instance " + std::to_string(i));
    }
    return result;
}

}  // namespace testutil
