#pragma once

// Shared test helpers and the independent oracles used to freeze expected
// values. The oracles deliberately avoid the library's geometry paths: they
// use their own elimination solver and brute-force enumeration.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "toric/analysis.hpp"
#include "toric/kodaira.hpp"

namespace testutil {

using namespace toric;

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline RatVec rv(std::initializer_list<const char*> xs) {
    RatVec out;
    for (const char* x : xs) out.push_back(parse_rat(x));
    return out;
}

inline std::vector<IntVec> ivs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> out;
    for (const auto& r : rows) out.push_back(iv(r));
    return out;
}

// --- independent exact solver (Gauss elimination with partial pivot) -------

inline std::optional<RatVec> oracle_solve(std::vector<RatVec> a, RatVec b) {
    const size_t rows = a.size();
    const size_t n = rows == 0 ? 0 : a.front().size();
    size_t pivot_row = 0;
    std::vector<size_t> pivot_col_of;
    for (size_t col = 0; col < n && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        std::swap(b[sel], b[pivot_row]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || a[i][col] == 0) continue;
            const Rat factor = a[i][col] / a[pivot_row][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= factor * a[pivot_row][j];
            b[i] -= factor * b[pivot_row];
        }
        pivot_col_of.push_back(col);
        ++pivot_row;
    }
    if (pivot_col_of.size() < n) return std::nullopt;
    for (size_t i = pivot_row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(n);
    for (size_t i = 0; i < pivot_col_of.size(); ++i) x[pivot_col_of[i]] = b[i] / a[i][pivot_col_of[i]];
    return x;
}

// --- brute-force vertex enumeration over n-subsets of halfspaces -----------

inline std::vector<RatVec> oracle_vertices(const std::vector<Halfspace>& hs, size_t n) {
    std::vector<RatVec> verts;
    const size_t m = hs.size();
    if (m < n) return verts;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<RatVec> a;
        RatVec b(n);
        for (size_t i = 0; i < n; ++i) {
            a.push_back(to_rat(hs[idx[i]].normal));
            b[i] = hs[idx[i]].offset;
        }
        if (auto x = oracle_solve(a, b)) {
            bool ok = true;
            for (const Halfspace& h : hs)
                if (pairing(*x, h.normal) < h.offset) {
                    ok = false;
                    break;
                }
            if (ok) verts.push_back(*x);
        }
        size_t k = n;
        while (k > 0 && idx[k - 1] == m - n + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (size_t i = k; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(verts.begin(), verts.end(), LexLess{});
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

// --- Caratheodory membership test for convex hulls --------------------------

inline bool oracle_in_hull(const IntVec& p, const std::vector<IntVec>& points) {
    const size_t n = p.size();
    const size_t k = std::min(points.size(), n + 1);  // Caratheodory subset size
    const size_t m = points.size();
    if (m == 0) return false;

    const auto feasible_combination = [&](const std::vector<size_t>& sel) {
        std::vector<RatVec> a(n + 1, RatVec(sel.size()));
        for (size_t row = 0; row < n; ++row)
            for (size_t j = 0; j < sel.size(); ++j) a[row][j] = Rat(points[sel[j]][row]);
        for (size_t j = 0; j < sel.size(); ++j) a[n][j] = 1;
        RatVec b;
        for (const Int& x : p) b.push_back(Rat(x));
        b.push_back(Rat(1));
        const auto lambda = oracle_solve(a, b);
        if (!lambda) return false;
        for (const Rat& l : *lambda)
            if (l < 0) return false;
        return true;
    };

    for (size_t s = 1; s <= k; ++s) {
        std::vector<size_t> comb(s);
        for (size_t i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            if (feasible_combination(comb)) return true;
            size_t t = s;
            while (t > 0 && comb[t - 1] == m - s + (t - 1)) --t;
            if (t == 0) break;
            ++comb[t - 1];
            for (size_t i = t; i < s; ++i) comb[i] = comb[i - 1] + 1;
        }
    }
    return false;
}

// --- brute-force root scan over a coordinate box ----------------------------

inline std::vector<IntVec> oracle_roots(const std::vector<IntVec>& rays, long bound) {
    const size_t n = rays.front().size();
    std::vector<IntVec> out;
    IntVec cur(n, Int(-bound));
    while (true) {
        size_t ones = 0;
        bool ok = true;
        for (const IntVec& r : rays) {
            const Int v = pairing(cur, r);
            if (v == 1)
                ++ones;
            else if (v > 0) {
                ok = false;
                break;
            }
        }
        if (ok && ones == 1) out.push_back(cur);
        size_t k = 0;
        while (k < n) {
            ++cur[k];
            if (cur[k] <= bound) break;
            cur[k] = -bound;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

// --- deterministic random geometry for the property suites ------------------

struct InstanceRng {
    std::mt19937_64 engine;
    explicit InstanceRng(unsigned long seed) : engine(seed) {}
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(engine() % static_cast<unsigned long>(hi - lo + 1));
    }
};

/// Random full-dimensional lattice polytope with small coordinates.
inline LatticePolytope random_polytope(InstanceRng& rng, size_t dim) {
    while (true) {
        const size_t count = dim + 1 + static_cast<size_t>(rng.uniform(0, 3));
        std::vector<IntVec> pts;
        for (size_t i = 0; i < count; ++i) {
            IntVec p(dim);
            for (size_t j = 0; j < dim; ++j) p[j] = rng.uniform(-3, 3);
            pts.push_back(std::move(p));
        }
        LatticePolytope cand = LatticePolytope::hull(pts);
        if (cand.is_full_dimensional()) return cand;
    }
}

/// Random polytope whose Fine interior is nonempty (has an interior lattice
/// point after a recentring trick, retried until the cut survives).
inline LatticePolytope random_polytope_with_fine_interior(InstanceRng& rng, size_t dim) {
    while (true) {
        LatticePolytope cand = random_polytope(rng, dim);
        if (!cand.interior_lattice_points().empty()) return cand;
    }
}

inline LaurentPolynomial dense_ones(const LatticePolytope& delta) {
    LaurentPolynomial f(delta.ambient_dim());
    for (const IntVec& m : delta.lattice_points()) f.add_term(m, Rat(1));
    return f;
}

}  // namespace testutil
