#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Guard for the grid walk in lattice_points; desk-scale inputs stay far below.
constexpr unsigned long kMaxGridCells = 20'000'000UL;

bool rat_vec_eq(const RatVec& a, const RatVec& b) { return a == b; }

void sort_dedup(std::vector<RatVec>& pts) {
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end(), rat_vec_eq), pts.end());
}

void sort_dedup(std::vector<IntVec>& pts) {
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

IntVec clear_denominators(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        out[i] = scaled.get_num();
    }
    return out;
}

struct AffineHull {
    int dim = -1;
    RatVec base;                      // first point
    std::vector<size_t> pivot_cols;   // coordinates that parametrize the hull
    std::vector<RatVec> directions;   // RREF basis of the direction space
};

AffineHull affine_hull(const std::vector<RatVec>& pts, size_t n) {
    AffineHull out;
    if (pts.empty()) return out;
    out.base = pts.front();
    std::vector<RatVec> diffs;
    diffs.reserve(pts.size() - 1);
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec d(n);
        for (size_t j = 0; j < n; ++j) d[j] = pts[i][j] - out.base[j];
        diffs.push_back(std::move(d));
    }
    RatMatrix m = RatMatrix::from_rows(diffs, n);
    const auto pivots = m.reduce();
    out.dim = static_cast<int>(pivots.size());
    out.pivot_cols = pivots;
    for (size_t i = 0; i < pivots.size(); ++i) out.directions.push_back(m.row(i));
    return out;
}

RatVec project_to_pivots(const RatVec& p, const AffineHull& hull) {
    RatVec y(hull.pivot_cols.size());
    for (size_t k = 0; k < hull.pivot_cols.size(); ++k)
        y[k] = p[hull.pivot_cols[k]] - hull.base[hull.pivot_cols[k]];
    return y;
}

/// Facets of a full-dimensional hull of `pts` in dimension d, by exhausting
/// the hyperplanes spanned by d-subsets of points.
std::vector<Halfspace> full_dim_facets(const std::vector<RatVec>& pts, size_t d) {
    std::set<std::pair<IntVec, Rat>> found;
    std::vector<size_t> idx(d);
    for (size_t i = 0; i < d; ++i) idx[i] = i;
    const size_t p = pts.size();
    if (p < d) return {};
    while (true) {
        // hyperplane through pts[idx...]
        std::vector<RatVec> rows;
        rows.reserve(d - 1);
        for (size_t i = 1; i < d; ++i) {
            RatVec r(d);
            for (size_t j = 0; j < d; ++j) r[j] = pts[idx[i]][j] - pts[idx[0]][j];
            rows.push_back(std::move(r));
        }
        RatMatrix m = RatMatrix::from_rows(rows, d);
        const auto kernel = m.nullspace();
        if (kernel.size() == 1) {
            IntVec w = primitive(clear_denominators(kernel.front()));
            Rat c = pairing(pts[idx[0]], w);
            bool above = false, below = false;
            for (const RatVec& q : pts) {
                const int s = cmp(pairing(q, w), c);
                if (s > 0) above = true;
                if (s < 0) below = true;
                if (above && below) break;
            }
            if (!(above && below)) {
                if (below) {
                    w = negate(w);
                    c = -c;
                }
                found.insert({std::move(w), std::move(c)});
            }
        }
        // next d-subset
        size_t k = d;
        while (k > 0 && idx[k - 1] == p - d + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (size_t i = k; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::vector<Halfspace> out;
    out.reserve(found.size());
    for (const auto& [w, c] : found) out.push_back(Halfspace{w, c});
    return out;
}

struct HullDescription {
    int dim = -1;
    std::vector<RatVec> vertices;
    std::vector<Halfspace> halfspaces;
};

HullDescription hull_description(std::vector<RatVec> pts, size_t n) {
    HullDescription out;
    sort_dedup(pts);
    if (pts.empty()) return out;

    const AffineHull hull = affine_hull(pts, n);
    out.dim = hull.dim;

    if (hull.dim == 0) {
        out.vertices = {pts.front()};
        for (size_t i = 0; i < n; ++i) {
            IntVec e(n, Int(0));
            e[i] = 1;
            out.halfspaces.push_back(Halfspace{e, pts.front()[i]});
            out.halfspaces.push_back(Halfspace{negate(e), -pts.front()[i]});
        }
        std::sort(out.halfspaces.begin(), out.halfspaces.end(), halfspace_less);
        return out;
    }

    const size_t d = static_cast<size_t>(hull.dim);
    std::vector<RatVec> work = pts;
    if (d < n)
        for (size_t i = 0; i < pts.size(); ++i) work[i] = project_to_pivots(pts[i], hull);

    std::vector<Halfspace> proj_facets = full_dim_facets(work, d);

    // Extreme points: tight facet normals of full rank in the working space.
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> tight;
        for (const Halfspace& h : proj_facets)
            if (pairing(work[i], h.normal) == h.offset) tight.push_back(h.normal);
        if (RatMatrix::from_int_rows(tight, d).rank() == d) out.vertices.push_back(pts[i]);
    }

    // Pull facets back to ambient coordinates.
    for (const Halfspace& h : proj_facets) {
        if (d == n) {
            out.halfspaces.push_back(h);
            continue;
        }
        IntVec nu(n, Int(0));
        Rat c = h.offset;
        for (size_t k = 0; k < d; ++k) {
            nu[hull.pivot_cols[k]] = h.normal[k];
            c += h.normal[k] * hull.base[hull.pivot_cols[k]];
        }
        out.halfspaces.push_back(Halfspace{std::move(nu), std::move(c)});
    }

    // Equality pairs cutting out the affine hull.
    if (d < n) {
        RatMatrix dirs = RatMatrix::from_rows(hull.directions, n);
        for (const RatVec& u_rat : dirs.nullspace()) {
            IntVec u = primitive(clear_denominators(u_rat));
            Rat c = pairing(hull.base, u);
            out.halfspaces.push_back(Halfspace{u, c});
            out.halfspaces.push_back(Halfspace{negate(u), -c});
        }
    }

    std::sort(out.halfspaces.begin(), out.halfspaces.end(), halfspace_less);
    return out;
}

/// All vertices of a bounded polytope given as a halfspace intersection:
/// solve every maximal-rank n-subset and keep the feasible solutions.
std::vector<RatVec> vertices_by_subsets(const std::vector<Halfspace>& hs, size_t n) {
    std::vector<RatVec> verts;
    const size_t m = hs.size();
    if (m < n) return verts;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<IntVec> rows;
        RatVec rhs(n);
        rows.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            rows.push_back(hs[idx[i]].normal);
            rhs[i] = hs[idx[i]].offset;
        }
        const auto x = solve_unique(RatMatrix::from_int_rows(rows, n), rhs);
        if (x) {
            bool feasible = true;
            for (const Halfspace& h : hs)
                if (pairing(*x, h.normal) < h.offset) {
                    feasible = false;
                    break;
                }
            if (feasible) verts.push_back(*x);
        }
        size_t k = n;
        while (k > 0 && idx[k - 1] == m - n + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (size_t i = k; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
    sort_dedup(verts);
    return verts;
}

/// Intersects a bounded polytope (vertex set + valid constraint list) with
/// further halfspaces, maintaining the exact vertex set.
std::vector<RatVec> cut_by_halfspaces(std::vector<RatVec> verts,
                                      std::vector<Halfspace> constraints,
                                      const std::vector<Halfspace>& cuts,
                                      size_t n) {
    for (const Halfspace& h : cuts) {
        if (verts.empty()) break;
        std::vector<RatVec> keep, strict_keep, violate;
        for (RatVec& v : verts) {
            const int s = cmp(pairing(v, h.normal), h.offset);
            if (s >= 0) {
                keep.push_back(v);
                if (s > 0) strict_keep.push_back(v);
            } else {
                violate.push_back(v);
            }
        }
        constraints.push_back(h);
        if (violate.empty()) {
            verts = std::move(keep);
            continue;
        }
        if (keep.empty()) {
            verts.clear();
            break;
        }
        std::vector<RatVec> created;
        for (const RatVec& v : strict_keep) {
            const Rat val_v = pairing(v, h.normal);
            for (const RatVec& w : violate) {
                const Rat val_w = pairing(w, h.normal);
                const Rat s = (val_v - h.offset) / (val_v - val_w);
                RatVec p(n);
                for (size_t j = 0; j < n; ++j) p[j] = v[j] + s * (w[j] - v[j]);
                bool feasible = true;
                std::vector<IntVec> tight;
                for (const Halfspace& c : constraints) {
                    const int sign = cmp(pairing(p, c.normal), c.offset);
                    if (sign < 0) {
                        feasible = false;
                        break;
                    }
                    if (sign == 0) tight.push_back(c.normal);
                }
                if (!feasible) continue;
                if (RatMatrix::from_int_rows(tight, n).rank() == n) created.push_back(std::move(p));
            }
        }
        sort_dedup(created);
        keep.insert(keep.end(), created.begin(), created.end());
        verts = std::move(keep);
    }
    sort_dedup(verts);
    return verts;
}

std::vector<IntVec> lattice_points_impl(const std::vector<Halfspace>& hs,
                                        const std::vector<RatVec>& verts, size_t n) {
    std::vector<IntVec> out;
    if (verts.empty()) return out;
    IntVec lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        Rat mn = verts.front()[i], mx = verts.front()[i];
        for (const RatVec& v : verts) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = rat_ceil(mn);
        hi[i] = rat_floor(mx);
        if (lo[i] > hi[i]) return out;
    }
    Int cells = 1;
    for (size_t i = 0; i < n; ++i) cells *= hi[i] - lo[i] + 1;
    if (cells > kMaxGridCells)
        throw precondition_error("lattice point grid too large for desk-scale enumeration");
    IntVec cur = lo;
    while (true) {
        bool inside = true;
        for (const Halfspace& h : hs)
            if (Rat(pairing(cur, h.normal)) < h.offset) {
                inside = false;
                break;
            }
        if (inside) out.push_back(cur);
        size_t k = 0;
        while (k < n) {
            ++cur[k];
            if (cur[k] <= hi[k]) break;
            cur[k] = lo[k];
            ++k;
        }
        if (k == n) break;
    }
    sort_dedup(out);
    return out;
}

std::vector<Halfspace> normalize_halfspaces(const std::vector<Halfspace>& hs, size_t n,
                                            bool* infeasible_constant) {
    *infeasible_constant = false;
    std::map<IntVec, Rat, LexLess> strongest;
    for (const Halfspace& h : hs) {
        if (h.normal.size() != n) throw std::invalid_argument("halfspace dimension mismatch");
        if (is_zero(h.normal)) {
            if (h.offset > 0) *infeasible_constant = true;  // 0 >= c with c > 0
            continue;
        }
        Halfspace c = canonical_halfspace(h.normal, h.offset);
        auto [it, inserted] = strongest.emplace(c.normal, c.offset);
        if (!inserted && c.offset > it->second) it->second = c.offset;
    }
    std::vector<Halfspace> out;
    out.reserve(strongest.size());
    for (auto& [nu, c] : strongest) out.push_back(Halfspace{nu, c});
    return out;
}

}  // namespace

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

Halfspace canonical_halfspace(IntVec normal, Rat offset) {
    IntVec p = primitive(normal);
    // offset scales with the gcd that primitive() divided out
    size_t i = 0;
    while (p[i] == 0) ++i;
    Rat scale(normal[i], p[i]);
    scale.canonicalize();
    return Halfspace{std::move(p), offset / scale};
}

bool Face::contains(const IntVec& m) const {
    for (const Halfspace& h : container)
        if (Rat(pairing(m, h.normal)) < h.offset) return false;
    for (const Halfspace& h : tight)
        if (Rat(pairing(m, h.normal)) != h.offset) return false;
    return true;
}

RationalHPolytope RationalHPolytope::empty(size_t ambient_dim) {
    RationalHPolytope p;
    p.ambient_dim_ = ambient_dim;
    p.dim_ = -1;
    p.bounded_ = true;
    return p;
}

RationalHPolytope RationalHPolytope::from_vertices(size_t ambient_dim, std::vector<RatVec> verts) {
    RationalHPolytope p;
    p.ambient_dim_ = ambient_dim;
    p.bounded_ = true;
    HullDescription desc = hull_description(std::move(verts), ambient_dim);
    p.dim_ = desc.dim;
    p.vertices_ = std::move(desc.vertices);
    p.halfspaces_ = std::move(desc.halfspaces);
    return p;
}

RationalHPolytope RationalHPolytope::from_halfspaces(size_t ambient_dim,
                                                     const std::vector<Halfspace>& halfspaces) {
    bool infeasible = false;
    std::vector<Halfspace> hs = normalize_halfspaces(halfspaces, ambient_dim, &infeasible);
    if (infeasible) return empty(ambient_dim);

    std::vector<IntVec> normals;
    normals.reserve(hs.size());
    for (const Halfspace& h : hs) normals.push_back(h.normal);
    if (!positively_spans(normals, ambient_dim)) {
        RationalHPolytope p;
        p.ambient_dim_ = ambient_dim;
        p.dim_ = -1;
        p.bounded_ = false;
        p.halfspaces_ = std::move(hs);
        return p;
    }
    return from_vertices(ambient_dim, vertices_by_subsets(hs, ambient_dim));
}

RationalHPolytope RationalHPolytope::intersect(const std::vector<Halfspace>& extra) const {
    if (!bounded_) throw precondition_error("cannot intersect an unbounded polyhedron");
    if (is_empty()) return *this;
    bool infeasible = false;
    std::vector<Halfspace> cuts = normalize_halfspaces(extra, ambient_dim_, &infeasible);
    if (infeasible) return empty(ambient_dim_);
    return from_vertices(ambient_dim_,
                         cut_by_halfspaces(vertices_, halfspaces_, cuts, ambient_dim_));
}

int RationalHPolytope::dim() const {
    if (!bounded_) throw precondition_error("dimension of an unbounded polyhedron");
    return dim_;
}

const std::vector<RatVec>& RationalHPolytope::vertices() const {
    if (!bounded_) throw precondition_error("vertex enumeration of an unbounded polyhedron");
    return vertices_;
}

std::vector<IntVec> RationalHPolytope::facet_normals() const {
    std::vector<IntVec> out;
    out.reserve(halfspaces_.size());
    for (const Halfspace& h : halfspaces_) out.push_back(h.normal);
    sort_dedup(out);
    return out;
}

Rat RationalHPolytope::min_support(const IntVec& nu) const {
    if (is_zero(nu)) throw std::invalid_argument("min_support of the zero direction");
    if (!bounded_) throw precondition_error("min_support over an unbounded polyhedron");
    if (is_empty()) throw precondition_error("min_support over the empty polytope");
    Rat best = pairing(vertices_.front(), nu);
    for (const RatVec& v : vertices_) {
        Rat val = pairing(v, nu);
        if (val < best) best = val;
    }
    return best;
}

bool RationalHPolytope::contains(const RatVec& x) const {
    if (is_empty() && bounded_) return false;
    for (const Halfspace& h : halfspaces_)
        if (pairing(x, h.normal) < h.offset) return false;
    return true;
}

bool RationalHPolytope::contains(const IntVec& m) const { return contains(to_rat(m)); }

std::vector<IntVec> RationalHPolytope::lattice_points() const {
    if (!bounded_) throw precondition_error("lattice point enumeration refused: unbounded polyhedron");
    return lattice_points_impl(halfspaces_, vertices_, ambient_dim_);
}

bool RationalHPolytope::all_vertices_integral() const {
    for (const RatVec& v : vertices()) {
        if (!is_integral(v)) return false;
    }
    return true;
}

bool RationalHPolytope::operator==(const RationalHPolytope& other) const {
    return ambient_dim_ == other.ambient_dim_ && bounded_ == other.bounded_ &&
           dim_ == other.dim_ && vertices_ == other.vertices_;
}

LatticePolytope LatticePolytope::hull(const std::vector<IntVec>& points) {
    if (points.empty()) throw std::invalid_argument("hull of an empty point set");
    const size_t n = points.front().size();
    std::vector<RatVec> rat_points;
    rat_points.reserve(points.size());
    for (const IntVec& p : points) {
        if (p.size() != n) throw std::invalid_argument("hull points of mixed dimension");
        rat_points.push_back(to_rat(p));
    }
    HullDescription desc = hull_description(std::move(rat_points), n);
    LatticePolytope out;
    out.ambient_dim_ = n;
    out.dim_ = desc.dim;
    for (const RatVec& v : desc.vertices) out.vertices_.push_back(to_int(v));
    for (const Halfspace& h : desc.halfspaces) {
        if (!is_integer(h.offset))
            throw std::logic_error("lattice hull produced a fractional facet offset");
        out.facets_.push_back(h);
    }
    return out;
}

std::vector<IntVec> LatticePolytope::facet_normals() const {
    std::vector<IntVec> out;
    out.reserve(facets_.size());
    for (const Halfspace& h : facets_) out.push_back(h.normal);
    sort_dedup(out);
    return out;
}

Int LatticePolytope::min_support(const IntVec& nu) const {
    if (is_zero(nu)) throw std::invalid_argument("min_support of the zero direction");
    Int best = pairing(vertices_.front(), nu);
    for (const IntVec& v : vertices_) {
        Int val = pairing(v, nu);
        if (val < best) best = val;
    }
    return best;
}

bool LatticePolytope::contains(const IntVec& m) const {
    for (const Halfspace& h : facets_)
        if (Rat(pairing(m, h.normal)) < h.offset) return false;
    return true;
}

bool LatticePolytope::contains(const RatVec& x) const {
    for (const Halfspace& h : facets_)
        if (pairing(x, h.normal) < h.offset) return false;
    return true;
}

std::vector<IntVec> LatticePolytope::lattice_points() const {
    std::vector<RatVec> verts;
    verts.reserve(vertices_.size());
    for (const IntVec& v : vertices_) verts.push_back(to_rat(v));
    return lattice_points_impl(facets_, verts, ambient_dim_);
}

std::vector<IntVec> LatticePolytope::interior_lattice_points() const {
    std::vector<IntVec> out;
    for (const IntVec& m : lattice_points()) {
        bool strict = true;
        for (const Halfspace& h : facets_)
            if (Rat(pairing(m, h.normal)) <= h.offset) {
                strict = false;
                break;
            }
        if (strict) out.push_back(m);
    }
    return out;
}

std::vector<Face> LatticePolytope::faces(int k) const {
    if (k < 0 || k > static_cast<int>(ambient_dim_))
        throw std::invalid_argument("face dimension out of range");

    using VertexSet = std::vector<size_t>;  // sorted vertex indices
    const size_t nv = vertices_.size();

    auto face_dim = [&](const VertexSet& vs) {
        std::vector<RatVec> pts;
        pts.reserve(vs.size());
        for (size_t i : vs) pts.push_back(to_rat(vertices_[i]));
        return affine_hull(pts, ambient_dim_).dim;
    };

    VertexSet all(nv);
    for (size_t i = 0; i < nv; ++i) all[i] = i;

    std::set<VertexSet> proper;
    for (const Halfspace& h : facets_) {
        VertexSet vs;
        for (size_t i = 0; i < nv; ++i)
            if (Rat(pairing(vertices_[i], h.normal)) == h.offset) vs.push_back(i);
        if (!vs.empty() && vs != all) proper.insert(vs);
    }
    // close under intersection with the facet vertex sets
    std::vector<VertexSet> frontier(proper.begin(), proper.end());
    const std::vector<VertexSet> generators = frontier;
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const VertexSet& f : frontier)
            for (const VertexSet& g : generators) {
                VertexSet meet;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                      std::back_inserter(meet));
                if (!meet.empty() && proper.insert(meet).second) next.push_back(std::move(meet));
            }
        frontier = std::move(next);
    }

    std::vector<Face> out;
    auto build = [&](const VertexSet& vs) {
        Face f;
        f.dim = face_dim(vs);
        for (size_t i : vs) f.vertices.push_back(vertices_[i]);
        for (const Halfspace& h : facets_) {
            bool tight = true;
            for (size_t i : vs)
                if (Rat(pairing(vertices_[i], h.normal)) != h.offset) {
                    tight = false;
                    break;
                }
            if (tight) f.tight.push_back(h);
        }
        f.container = facets_;
        return f;
    };

    if (k == dim_) out.push_back(build(all));
    for (const VertexSet& vs : proper) {
        if (face_dim(vs) != k) continue;
        out.push_back(build(vs));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                            b.vertices.begin(), b.vertices.end(), LexLess{});
    });
    return out;
}

RationalHPolytope LatticePolytope::to_rational() const {
    std::vector<RatVec> verts;
    verts.reserve(vertices_.size());
    for (const IntVec& v : vertices_) verts.push_back(to_rat(v));
    return RationalHPolytope::from_vertices(ambient_dim_, std::move(verts));
}

RationalHPolytope divisor_polytope(const ToricDivisorData& divisor) {
    if (divisor.rays.size() != divisor.coefficients.size())
        throw std::invalid_argument("divisor data: one coefficient per ray required");
    if (divisor.rays.empty()) throw std::invalid_argument("divisor data: no rays");
    const size_t n = divisor.rays.front().size();
    std::set<IntVec> seen;
    std::vector<Halfspace> hs;
    for (size_t i = 0; i < divisor.rays.size(); ++i) {
        const IntVec& ray = divisor.rays[i];
        if (is_zero(ray) || primitive(ray) != ray)
            throw std::invalid_argument("divisor rays must be primitive");
        if (!seen.insert(ray).second) throw std::invalid_argument("divisor rays must be distinct");
        hs.push_back(Halfspace{ray, Rat(-divisor.coefficients[i])});
    }
    return RationalHPolytope::from_halfspaces(n, hs);
}

bool positively_spans(const std::vector<IntVec>& vectors, size_t ambient_dim) {
    // The vectors positively span iff {d in [-1,1]^n : <d, v> >= 0 for all v}
    // collapses to the origin.
    const size_t n = ambient_dim;
    std::vector<RatVec> corners;
    std::vector<IntVec> signs(1, IntVec{});
    corners.reserve(1u << n);
    IntVec cur(n, Int(-1));
    while (true) {
        corners.push_back(to_rat(cur));
        size_t k = 0;
        while (k < n) {
            cur[k] += 2;
            if (cur[k] <= 1) break;
            cur[k] = -1;
            ++k;
        }
        if (k == n) break;
    }
    std::vector<Halfspace> box;
    for (size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        box.push_back(Halfspace{e, Rat(-1)});
        box.push_back(Halfspace{negate(e), Rat(-1)});
    }
    std::vector<Halfspace> cuts;
    for (const IntVec& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("ray dimension mismatch");
        if (is_zero(v)) continue;
        cuts.push_back(Halfspace{primitive(v), Rat(0)});
    }
    const auto verts = cut_by_halfspaces(std::move(corners), std::move(box), cuts, n);
    const RatVec origin(n, Rat(0));
    for (const RatVec& v : verts)
        if (v != origin) return false;
    return !verts.empty();
}

}  // namespace toric
