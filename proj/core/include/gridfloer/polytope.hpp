#pragma once

#include <string>
#include <vector>

#include "gridfloer/complex.hpp"
#include "gridfloer/grid.hpp"

namespace gridfloer {

/// Supporting half-space normal . x <= offset with integer data, gcd-reduced.
struct Facet {
    std::vector<long long> normal;
    long long offset = 0;

    bool operator==(const Facet&) const = default;
};

/// Exact integer polytope on the doubled Alexander lattice. vertices holds
/// the extreme points only, sorted lexicographically; facets are populated
/// on demand for full-dimensional polytopes.
struct LatticePolytope {
    int dim = 0;
    std::vector<std::vector<long long>> vertices;
    std::vector<Facet> facets;
};

/// Extreme points of an integer point set, dim <= 4.
LatticePolytope convex_vertices(std::vector<std::vector<long long>> points, int dim);

/// Exhaustive support-hyperplane search; requires a full-dimensional
/// polytope (every facet then spans dim affinely independent vertices).
void ensure_facets(LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Axis-aligned cube [-side/2, side/2]^dim, side a positive even integer.
LatticePolytope axis_cube(int dim, long long side);

/// P (-) C = {x : x + C subset of P} for the axis cube of the given side.
/// Degenerate P erodes to nothing; a nonempty erosion must be a lattice
/// polytope or NonLatticeErosion is thrown.
LatticePolytope erode_by_cube(const LatticePolytope& p, long long side);

struct ShapeReport {
    std::size_t vertex_count = 0;
    bool is_axis_box = false;
    bool is_centrally_symmetric = false;
    bool is_full_dimensional = false;
};

ShapeReport polytope_shape(const LatticePolytope& p);

int affine_rank(const std::vector<std::vector<long long>>& pts);

struct LinkPolytopeReport {
    LatticePolytope polytope;
    ShapeReport shape;
    bool dual_thurston_valid = false;
    std::string dual_thurston_reason;  // set when the dual polytope is absent
    LatticePolytope dual_thurston;
};

/// Hull of the alex2 support of hat-flavor ranks; the dual Thurston norm
/// polytope is recovered by cube erosion when the no-trivial-component
/// hypothesis holds and the reconstruction certifies.
LinkPolytopeReport link_floer_polytope(const MultigradedRanks& hat,
                                       const LinkingMatrix& linking);

}  // namespace gridfloer
