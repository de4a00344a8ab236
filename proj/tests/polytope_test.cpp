#include <doctest.h>

#include <random>

#include "gridfloer/corpus.hpp"
#include "gridfloer/polytope.hpp"

using namespace gridfloer;

namespace {
using Pts = std::vector<std::vector<long long>>;
}

TEST_CASE("interior points are dropped") {
    LatticePolytope p = convex_vertices(Pts{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}, {0, 0}}, 2);
    CHECK(p.vertices == Pts{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
}

TEST_CASE("collinear points keep only the endpoints") {
    LatticePolytope p = convex_vertices(Pts{{0}, {1}, {2}}, 1);
    CHECK(p.vertices == Pts{{0}, {2}});
}

TEST_CASE("dimension limit is enforced") {
    CHECK_THROWS_AS(convex_vertices(Pts{{0, 0, 0, 0, 0}}, 5), DimensionTooLarge);
    CHECK_THROWS_AS(convex_vertices(Pts{{0, 0}}, 3), DimensionMismatch);
}

TEST_CASE("hull idempotence") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 1 + (int)(rng() % 3);
        Pts pts;
        for (int i = 0; i < 8; ++i) {
            std::vector<long long> v(dim);
            for (int k = 0; k < dim; ++k) v[k] = (long long)(rng() % 9) - 4;
            pts.push_back(std::move(v));
        }
        LatticePolytope p = convex_vertices(pts, dim);
        LatticePolytope q = convex_vertices(p.vertices, dim);
        CHECK(p.vertices == q.vertices);
    }
}

TEST_CASE("facets of the square") {
    LatticePolytope p = convex_vertices(Pts{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}, 2);
    ensure_facets(p);
    CHECK(p.facets.size() == 4);
    for (const Facet& f : p.facets)
        for (const auto& v : p.vertices)
            CHECK(f.normal[0] * v[0] + f.normal[1] * v[1] <= f.offset);
}

TEST_CASE("minkowski sum of two squares doubles the side") {
    LatticePolytope sq = axis_cube(2, 2);
    LatticePolytope sum = minkowski_sum(sq, sq);
    CHECK(sum.vertices == Pts{{-2, -2}, {-2, 2}, {2, -2}, {2, 2}});
}

TEST_CASE("segment plus square keeps four vertices") {
    LatticePolytope seg = convex_vertices(Pts{{-1, 0}, {1, 0}}, 2);
    LatticePolytope sum = minkowski_sum(seg, axis_cube(2, 2));
    CHECK(sum.vertices.size() == 4);
    CHECK(sum.vertices == Pts{{-2, -1}, {-2, 1}, {2, -1}, {2, 1}});
}

TEST_CASE("adding a point translates") {
    LatticePolytope p = convex_vertices(Pts{{0, 0}, {2, 0}, {0, 2}}, 2);
    LatticePolytope pt = convex_vertices(Pts{{5, -1}}, 2);
    LatticePolytope sum = minkowski_sum(p, pt);
    CHECK(sum.vertices == Pts{{5, -1}, {5, 1}, {7, -1}});
}

TEST_CASE("minkowski vertex-count lemma holds on 200 random trials") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 1 + (int)(rng() % 3);
        auto random_poly = [&] {
            Pts pts;
            const int count = 2 + (int)(rng() % 6);
            for (int i = 0; i < count; ++i) {
                std::vector<long long> v(dim);
                for (int k = 0; k < dim; ++k) v[k] = (long long)(rng() % 11) - 5;
                pts.push_back(std::move(v));
            }
            return convex_vertices(pts, dim);
        };
        LatticePolytope p = random_poly(), q = random_poly();
        LatticePolytope sum = minkowski_sum(p, q);
        CHECK(sum.vertices.size() >= std::max(p.vertices.size(), q.vertices.size()));
    }
}

TEST_CASE("cube eroded by itself is the origin") {
    LatticePolytope e = erode_by_cube(axis_cube(2, 2), 2);
    CHECK(e.vertices == Pts{{0, 0}});
}

TEST_CASE("slab erosion leaves a segment") {
    LatticePolytope p =
        convex_vertices(Pts{{-2, -1}, {-2, 1}, {2, -1}, {2, 1}}, 2);
    LatticePolytope e = erode_by_cube(p, 2);
    CHECK(e.vertices == Pts{{-1, 0}, {1, 0}});
}

TEST_CASE("triangle erosion is empty") {
    LatticePolytope p = convex_vertices(Pts{{0, 0}, {3, 0}, {0, 3}}, 2);
    CHECK_THROWS_AS(erode_by_cube(p, 2), EmptyErosion);
}

TEST_CASE("degenerate polytope cannot contain a cube") {
    LatticePolytope seg = convex_vertices(Pts{{-3, 0}, {3, 0}}, 2);
    CHECK_THROWS_AS(erode_by_cube(seg, 2), EmptyErosion);
}

TEST_CASE("erosion reconstruction on random boxes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 1 + (int)(rng() % 3);
        Pts corners;
        std::vector<long long> lo(dim), hi(dim);
        for (int k = 0; k < dim; ++k) {
            lo[k] = (long long)(rng() % 4) - 5;
            hi[k] = lo[k] + 2 + (long long)(rng() % 4);
        }
        for (int mask = 0; mask < (1 << dim); ++mask) {
            std::vector<long long> v(dim);
            for (int k = 0; k < dim; ++k) v[k] = (mask >> k) & 1 ? hi[k] : lo[k];
            corners.push_back(std::move(v));
        }
        LatticePolytope p = convex_vertices(corners, dim);
        LatticePolytope e = erode_by_cube(p, 2);
        LatticePolytope back = minkowski_sum(e, axis_cube(dim, 2));
        CHECK(back.vertices == p.vertices);
    }
}

TEST_CASE("shape report on the cube") {
    ShapeReport s = polytope_shape(axis_cube(3, 2));
    CHECK(s.vertex_count == 8);
    CHECK(s.is_axis_box);
    CHECK(s.is_centrally_symmetric);
    CHECK(s.is_full_dimensional);
}

TEST_CASE("shifted box is a box but not centrally symmetric") {
    LatticePolytope p = convex_vertices(Pts{{0, 0}, {2, 0}, {0, 2}, {2, 2}}, 2);
    ShapeReport s = polytope_shape(p);
    CHECK(s.is_axis_box);
    CHECK_FALSE(s.is_centrally_symmetric);
}

TEST_CASE("hopf link floer polytope is the square with dual point") {
    GridDiagram g = corpus_grid("hopf");
    MultigradedRanks hat = hat_ranks(tilde_homology(g));
    LinkingMatrix lk = linking_matrix(g, trace_components(g));
    LinkPolytopeReport rep = link_floer_polytope(hat, lk);
    CHECK(rep.polytope.vertices == Pts{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    CHECK(rep.shape.vertex_count == 4);
    CHECK(rep.shape.is_axis_box);
    CHECK(rep.shape.is_centrally_symmetric);
    REQUIRE(rep.dual_thurston_valid);
    CHECK(rep.dual_thurston.vertices == Pts{{0, 0}});
}

TEST_CASE("trefoil dual thurston polytope is the interval") {
    GridDiagram g = corpus_grid("trefoil");
    MultigradedRanks hat = hat_ranks(tilde_homology(g));
    LinkingMatrix lk = linking_matrix(g, trace_components(g));
    LinkPolytopeReport rep = link_floer_polytope(hat, lk);
    CHECK(rep.polytope.vertices == Pts{{-2}, {2}});
    REQUIRE(rep.dual_thurston_valid);
    CHECK(rep.dual_thurston.vertices == Pts{{-1}, {1}});
}

TEST_CASE("trivial component gates the dual thurston polytope") {
    GridDiagram g = corpus_grid("hopf-disjoint-unknot");
    MultigradedRanks hat = hat_ranks(tilde_homology(g));
    LinkingMatrix lk = linking_matrix(g, trace_components(g));
    LinkPolytopeReport rep = link_floer_polytope(hat, lk);
    CHECK_FALSE(rep.dual_thurston_valid);
    CHECK(rep.dual_thurston_reason.find("trivial component") != std::string::npos);
}
