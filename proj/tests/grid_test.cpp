#include <doctest.h>

#include "gridfloer/grid.hpp"

using namespace gridfloer;

namespace {
const char* kHopf = "n=4\nO: 2 3 0 1\nX: 0 1 2 3\n";
}

TEST_CASE("parse accepts the size-2 unknot grid") {
    GridDiagram g = parse_grid("n=2\nO: 1 0\nX: 0 1\n");
    CHECK(g.n == 2);
    CHECK(g.o_rows == std::vector<int>{1, 0});
    CHECK(g.x_rows == std::vector<int>{0, 1});
}

TEST_CASE("parse handles comments and name line") {
    GridDiagram g = parse_grid("# comment\nn=2\nO: 1 0\n# another\nX: 0 1\nname=foo\n");
    CHECK(g.name == "foo");
}

TEST_CASE("parse rejects overlapping markings naming the column") {
    CHECK_THROWS_AS(parse_grid("n=2\nO: 0 1\nX: 0 1\n"), OverlappingMarkings);
    try {
        parse_grid("n=2\nO: 0 1\nX: 0 1\n");
    } catch (const OverlappingMarkings& e) {
        CHECK(std::string(e.what()).find("0") != std::string::npos);
    }
}

TEST_CASE("parse rejects non-permutations") {
    CHECK_THROWS_AS(parse_grid("n=2\nO: 1 1\nX: 0 1\n"), NotAPermutation);
    CHECK_THROWS_AS(parse_grid("n=2\nO: 1 0\nX: 0 2\n"), NotAPermutation);
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse_grid(""), ParseError);
    CHECK_THROWS_AS(parse_grid("n=x\nO: 1 0\nX: 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_grid("n=2\nO: 1\nX: 0 1\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
    GridDiagram g = parse_grid(kHopf);
    g.name = "hopf";
    GridDiagram again = parse_grid(serialize_grid(g));
    CHECK(again.n == g.n);
    CHECK(again.o_rows == g.o_rows);
    CHECK(again.x_rows == g.x_rows);
    CHECK(again.name == g.name);
}

TEST_CASE("component tracing follows the orbit oracle") {
    // Hand trace of the Hopf candidate: column 0 -> X at row 0 -> O in row 0
    // is column 2 -> X at row 2 -> O in row 2 is column 0. So {0,2} is one
    // orbit and {1,3} the other.
    GridDiagram g = parse_grid(kHopf);
    ComponentPartition parts = trace_components(g);
    CHECK(parts.count == 2);
    CHECK(parts.column_owner == std::vector<int>{0, 1, 0, 1});
    CHECK(parts.marks_per_component == std::vector<int>{2, 2});
}

TEST_CASE("size-2 grid is a single component") {
    ComponentPartition parts = trace_components(parse_grid("n=2\nO: 1 0\nX: 0 1\n"));
    CHECK(parts.count == 1);
    CHECK(parts.marks_per_component == std::vector<int>{2});
}

TEST_CASE("linking number of the Hopf grid is +-1 and symmetric") {
    GridDiagram g = parse_grid(kHopf);
    ComponentPartition parts = trace_components(g);
    const int lk01 = linking_number(g, parts, 0, 1);
    CHECK(std::abs(lk01) == 1);
    CHECK(linking_number(g, parts, 1, 0) == lk01);
    CHECK_THROWS_AS(linking_number(g, parts, 0, 0), SameComponent);
}

TEST_CASE("linking vanishes across disjoint union blocks") {
    GridDiagram u = parse_grid("n=2\nO: 1 0\nX: 0 1\n");
    GridDiagram g = disjoint_union(u, u);
    CHECK(g.n == 4);
    ComponentPartition parts = trace_components(g);
    CHECK(parts.count == 2);
    CHECK(linking_number(g, parts, 0, 1) == 0);
}

TEST_CASE("removing a Hopf component leaves a size-2 unknot") {
    GridDiagram g = parse_grid(kHopf);
    GridDiagram sub = remove_component(g, 1);
    CHECK(sub.n == 2);
    CHECK(trace_components(sub).count == 1);
}

TEST_CASE("removing a block of a disjoint union recovers the other block") {
    GridDiagram u = parse_grid("n=2\nO: 1 0\nX: 0 1\n");
    GridDiagram hopf = parse_grid(kHopf);
    GridDiagram g = disjoint_union(hopf, u);
    GridDiagram sub = remove_component(g, 2);
    CHECK(sub.n == hopf.n);
    CHECK(sub.o_rows == hopf.o_rows);
    CHECK(sub.x_rows == hopf.x_rows);
}

TEST_CASE("remove_component error cases") {
    GridDiagram g = parse_grid(kHopf);
    CHECK_THROWS_AS(remove_component(g, 5), InvalidComponent);
    GridDiagram u = parse_grid("n=2\nO: 1 0\nX: 0 1\n");
    CHECK_THROWS_AS(remove_component(u, 0), LastComponent);
}

TEST_CASE("linking matrix is symmetric with zero diagonal") {
    GridDiagram g = parse_grid(kHopf);
    LinkingMatrix lk = linking_matrix(g, trace_components(g));
    CHECK(lk.count == 2);
    CHECK(lk.lk[0][0] == 0);
    CHECK(lk.lk[1][1] == 0);
    CHECK(lk.lk[0][1] == lk.lk[1][0]);
    CHECK(lk.total_linking_with_rest(0) == lk.lk[0][1]);
}
