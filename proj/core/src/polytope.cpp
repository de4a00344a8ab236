#include "gridfloer/polytope.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <numeric>
#include <set>

namespace gridfloer {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Phase-I simplex with Bland's rule: does A x = b admit x >= 0?
bool has_nonnegative_solution(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (rows == 0) return true;
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }
    // tableau [A | I | b], artificial basis
    std::vector<std::size_t> basis(rows);
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + rows + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
        t[i][cols + i] = 1;
        t[i][cols + rows] = b[i];
        basis[i] = cols + i;
    }
    for (;;) {
        // reduced cost of column j for "minimize sum of artificials"
        long enter = -1;
        for (std::size_t j = 0; j < cols && enter < 0; ++j) {
            Rational c = 0;
            for (std::size_t i = 0; i < rows; ++i)
                if (basis[i] >= cols) c += t[i][j];
            if (c > 0) enter = (long)j;
        }
        if (enter < 0) break;
        long leave = -1;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols + rows] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = (long)i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded; cannot happen with sum-to-one rows
        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if ((long)i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols + rows; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = (std::size_t)enter;
    }
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= cols && t[i][cols + rows] != 0) return false;
    return true;
}

// Is p a convex combination of the given points?
bool in_convex_hull(const std::vector<long long>& p,
                    const std::vector<std::vector<long long>>& points) {
    if (points.empty()) return false;
    const std::size_t dim = p.size();
    std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(dim + 1);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < points.size(); ++j) a[k][j] = points[j][k];
        b[k] = p[k];
    }
    for (std::size_t j = 0; j < points.size(); ++j) a[dim][j] = 1;
    b[dim] = 1;
    return has_nonnegative_solution(std::move(a), std::move(b));
}

// Generalized cross product: normal to dim-1 vectors in R^dim by cofactor
// expansion. Returns the zero vector when the input is dependent.
std::vector<long long> normal_vector(const std::vector<std::vector<long long>>& vecs, int dim) {
    if (dim == 1) return {1};
    std::vector<long long> normal(dim, 0);
    // minor determinant omitting column k
    std::vector<int> cols;
    for (int k = 0; k < dim; ++k) {
        cols.clear();
        for (int c = 0; c < dim; ++c)
            if (c != k) cols.push_back(c);
        // determinant of (dim-1)x(dim-1) integer matrix, dim <= 4
        const int m = dim - 1;
        long long det = 0;
        if (m == 1) {
            det = vecs[0][cols[0]];
        } else if (m == 2) {
            det = vecs[0][cols[0]] * vecs[1][cols[1]] - vecs[0][cols[1]] * vecs[1][cols[0]];
        } else {  // m == 3
            for (int i = 0; i < 3; ++i) {
                const long long sign = (i % 2 == 0) ? 1 : -1;
                const long long a = vecs[1][cols[(i + 1) % 3 < i ? 0 : 0]] * 0;  // unused
                (void)a;
                long long minor = vecs[1][cols[(i == 0) ? 1 : 0]] * vecs[2][cols[(i == 2) ? 1 : 2]] -
                                  vecs[1][cols[(i == 2) ? 1 : 2]] * vecs[2][cols[(i == 0) ? 1 : 0]];
                det += sign * vecs[0][cols[i]] * minor;
            }
        }
        normal[k] = ((dim - 1 - k) % 2 == 0 ? 1 : -1) * det;
    }
    return normal;
}

void gcd_reduce(Facet& f) {
    long long g = std::abs(f.offset);
    for (long long v : f.normal) g = std::gcd(g, std::abs(v));
    if (g > 1) {
        for (auto& v : f.normal) v /= g;
        f.offset /= g;
    }
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

int affine_rank(const std::vector<std::vector<long long>>& pts) {
    if (pts.empty()) return -1;
    const std::size_t dim = pts[0].size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = pts[i][k] - pts[0][k];
        rows.push_back(std::move(v));
    }
    int rank = 0;
    for (std::size_t col = 0; col < dim && rank < (int)rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((int)i == rank || rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t k = col; k < dim; ++k) rows[i][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

LatticePolytope convex_vertices(std::vector<std::vector<long long>> points, int dim) {
    if (dim > 4) throw DimensionTooLarge("convex_vertices: dim " + std::to_string(dim) + " > 4");
    if (points.empty()) throw DomainError("convex_vertices: empty point set");
    for (const auto& p : points)
        if ((int)p.size() != dim)
            throw DimensionMismatch("convex_vertices: point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope poly;
    poly.dim = dim;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::vector<long long>> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others)) poly.vertices.push_back(points[i]);
    }
    return poly;
}

void ensure_facets(LatticePolytope& p) {
    if (!p.facets.empty()) return;
    if (affine_rank(p.vertices) != p.dim)
        throw DomainError("ensure_facets: polytope is not full-dimensional");
    const int dim = p.dim;
    const std::size_t nv = p.vertices.size();
    std::set<std::pair<std::vector<long long>, long long>> seen;

    std::vector<int> idx(dim);
    // iterate over dim-subsets of vertices
    std::vector<int> comb(dim);
    std::iota(comb.begin(), comb.end(), 0);
    if ((int)nv < dim) throw DomainError("ensure_facets: too few vertices");
    for (;;) {
        std::vector<std::vector<long long>> diffs;
        for (int k = 1; k < dim; ++k) {
            std::vector<long long> d(dim);
            for (int c = 0; c < dim; ++c)
                d[c] = p.vertices[comb[k]][c] - p.vertices[comb[0]][c];
            diffs.push_back(std::move(d));
        }
        std::vector<long long> normal = normal_vector(diffs, dim);
        bool nonzero = false;
        for (long long v : normal) nonzero |= (v != 0);
        if (nonzero) {
            const long long b = dot(normal, p.vertices[comb[0]]);
            bool all_le = true, all_ge = true;
            for (const auto& v : p.vertices) {
                const long long d = dot(normal, v);
                all_le &= (d <= b);
                all_ge &= (d >= b);
            }
            if (all_le != all_ge) {  // supporting and not containing everything
                Facet f;
                if (all_le) {
                    f.normal = normal;
                    f.offset = b;
                } else {
                    f.normal = normal;
                    for (auto& v : f.normal) v = -v;
                    f.offset = -b;
                }
                gcd_reduce(f);
                if (seen.emplace(f.normal, f.offset).second) p.facets.push_back(std::move(f));
            }
        }
        // next combination
        int k = dim - 1;
        while (k >= 0 && comb[k] == (int)nv - dim + k) --k;
        if (k < 0) break;
        ++comb[k];
        for (int j = k + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
    }
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim != q.dim)
        throw DimensionMismatch("minkowski_sum: dim " + std::to_string(p.dim) + " vs " +
                                std::to_string(q.dim));
    std::vector<std::vector<long long>> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) {
            std::vector<long long> s(p.dim);
            for (int k = 0; k < p.dim; ++k) s[k] = a[k] + b[k];
            sums.push_back(std::move(s));
        }
    return convex_vertices(std::move(sums), p.dim);
}

LatticePolytope axis_cube(int dim, long long side) {
    if (side <= 0 || side % 2 != 0)
        throw DomainError("axis_cube: side must be a positive even integer");
    LatticePolytope cube;
    cube.dim = dim;
    const long long h = side / 2;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        std::vector<long long> v(dim);
        for (int k = 0; k < dim; ++k) v[k] = (mask >> k) & 1 ? h : -h;
        cube.vertices.push_back(std::move(v));
    }
    std::sort(cube.vertices.begin(), cube.vertices.end());
    return cube;
}

LatticePolytope erode_by_cube(const LatticePolytope& p, long long side) {
    if (side <= 0 || side % 2 != 0)
        throw DomainError("erode_by_cube: side must be a positive even integer");
    if (affine_rank(p.vertices) != p.dim)
        throw EmptyErosion("erode_by_cube: polytope is degenerate, no full-dimensional cube fits");
    LatticePolytope work = p;
    ensure_facets(work);
    const int dim = p.dim;
    const long long h = side / 2;

    std::vector<Facet> shrunk = work.facets;
    for (Facet& f : shrunk) {
        long long support = 0;
        for (long long v : f.normal) support += std::abs(v);
        f.offset -= h * support;
    }

    // basic solutions: intersections of dim shrunk hyperplanes
    std::set<std::vector<Rational>> candidates;
    std::vector<int> comb(dim);
    std::iota(comb.begin(), comb.end(), 0);
    const std::size_t nf = shrunk.size();
    if (nf < (std::size_t)dim) throw EmptyErosion("erode_by_cube: erosion is empty");
    for (;;) {
        // solve the dim x dim system exactly
        std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim + 1));
        for (int i = 0; i < dim; ++i) {
            for (int k = 0; k < dim; ++k) m[i][k] = shrunk[comb[i]].normal[k];
            m[i][dim] = shrunk[comb[i]].offset;
        }
        bool singular = false;
        for (int col = 0; col < dim && !singular; ++col) {
            int pivot = -1;
            for (int i = col; i < dim; ++i)
                if (m[i][col] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) {
                singular = true;
                break;
            }
            std::swap(m[col], m[pivot]);
            for (int i = 0; i < dim; ++i) {
                if (i == col || m[i][col] == 0) continue;
                const Rational f = m[i][col] / m[col][col];
                for (int k = col; k <= dim; ++k) m[i][k] -= f * m[col][k];
            }
        }
        if (!singular) {
            std::vector<Rational> x(dim);
            for (int i = 0; i < dim; ++i) x[i] = m[i][dim] / m[i][i];
            bool inside = true;
            for (const Facet& f : shrunk) {
                Rational d = 0;
                for (int k = 0; k < dim; ++k) d += Rational(f.normal[k]) * x[k];
                if (d > f.offset) {
                    inside = false;
                    break;
                }
            }
            if (inside) candidates.insert(std::move(x));
        }
        int k = dim - 1;
        while (k >= 0 && comb[k] == (int)nf - dim + k) --k;
        if (k < 0) break;
        ++comb[k];
        for (int j = k + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (candidates.empty()) throw EmptyErosion("erode_by_cube: erosion is empty");

    std::vector<std::vector<long long>> lattice_points;
    for (const auto& x : candidates) {
        std::vector<long long> v(dim);
        for (int k = 0; k < dim; ++k) {
            if (boost::multiprecision::denominator(x[k]) != 1)
                throw NonLatticeErosion("erode_by_cube: erosion has a non-integer vertex");
            v[k] = (long long)boost::multiprecision::numerator(x[k]);
        }
        lattice_points.push_back(std::move(v));
    }
    return convex_vertices(std::move(lattice_points), dim);
}

ShapeReport polytope_shape(const LatticePolytope& p) {
    ShapeReport r;
    r.vertex_count = p.vertices.size();
    r.is_full_dimensional = affine_rank(p.vertices) == p.dim;

    // axis box: vertex set equals the product of per-coordinate extremes
    std::vector<long long> lo(p.dim), hi(p.dim);
    for (int k = 0; k < p.dim; ++k) {
        lo[k] = hi[k] = p.vertices[0][k];
        for (const auto& v : p.vertices) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }
    std::set<std::vector<long long>> corners;
    for (int mask = 0; mask < (1 << p.dim); ++mask) {
        std::vector<long long> v(p.dim);
        for (int k = 0; k < p.dim; ++k) v[k] = (mask >> k) & 1 ? hi[k] : lo[k];
        corners.insert(std::move(v));
    }
    std::set<std::vector<long long>> verts(p.vertices.begin(), p.vertices.end());
    r.is_axis_box = (verts == corners);

    r.is_centrally_symmetric = true;
    for (const auto& v : p.vertices) {
        std::vector<long long> neg(p.dim);
        for (int k = 0; k < p.dim; ++k) neg[k] = -v[k];
        if (!verts.count(neg)) {
            r.is_centrally_symmetric = false;
            break;
        }
    }
    return r;
}

LinkPolytopeReport link_floer_polytope(const MultigradedRanks& hat,
                                       const LinkingMatrix& linking) {
    LinkPolytopeReport report;
    const int dim = hat.components;
    std::vector<std::vector<long long>> support;
    for (const auto& [h, r] : hat.entries)
        support.push_back(std::vector<long long>(h.alex2.begin(), h.alex2.end()));
    report.polytope = convex_vertices(std::move(support), dim);
    report.shape = polytope_shape(report.polytope);

    if (!report.shape.is_full_dimensional) {
        report.dual_thurston_valid = false;
        report.dual_thurston_reason = "trivial component present (link Floer polytope is degenerate";
        // name a flat axis with zero linking row when one exists
        for (int k = 0; k < dim; ++k) {
            bool flat = true;
            for (const auto& v : report.polytope.vertices) flat &= (v[k] == report.polytope.vertices[0][k]);
            if (flat && linking.total_linking_with_rest(k) == 0) {
                report.dual_thurston_reason += ", component " + std::to_string(k) + " is flat";
                break;
            }
        }
        report.dual_thurston_reason += ")";
        return report;
    }

    try {
        LatticePolytope eroded = erode_by_cube(report.polytope, 2);
        LatticePolytope rebuilt = minkowski_sum(eroded, axis_cube(dim, 2));
        if (rebuilt.vertices == report.polytope.vertices) {
            report.dual_thurston_valid = true;
            report.dual_thurston = std::move(eroded);
        } else {
            report.dual_thurston_reason = "reconstruction failed: the cube is not a Minkowski summand";
        }
    } catch (const EmptyErosion&) {
        report.dual_thurston_reason = "erosion is empty: the cube is not a Minkowski summand";
    } catch (const NonLatticeErosion&) {
        report.dual_thurston_reason = "erosion is not a lattice polytope";
    }
    return report;
}

}  // namespace gridfloer
