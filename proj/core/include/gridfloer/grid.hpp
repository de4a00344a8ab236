#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridfloer/errors.hpp"

namespace gridfloer {

/// A size-n toroidal grid diagram. Columns are indexed left to right,
/// rows bottom up, both 0-based. Column j carries one O at row o_rows[j]
/// and one X at row x_rows[j]; markings sit at cell centers (j+1/2, r+1/2).
struct GridDiagram {
    int n = 0;
    std::vector<int> o_rows;
    std::vector<int> x_rows;
    std::string name;

    /// Throws NotAPermutation / OverlappingMarkings when the invariants fail.
    void validate() const;

    /// Column of the O marking in row r.
    int o_col(int r) const;
    /// Column of the X marking in row r.
    int x_col(int r) const;
};

/// Partition of columns/rows into link components. Components are numbered
/// by their smallest owned column.
struct ComponentPartition {
    int count = 0;
    std::vector<int> column_owner;
    std::vector<int> row_owner;
    std::vector<int> marks_per_component;
};

/// Symmetric, zero-diagonal matrix of pairwise linking numbers.
struct LinkingMatrix {
    int count = 0;
    std::vector<std::vector<int>> lk;

    /// lk(L \ L_i, L_i) = sum over j != i of lk(L_j, L_i).
    int total_linking_with_rest(int i) const;
};

GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& g);

/// Follows the closed orbits column -> X -> row -> O -> column.
ComponentPartition trace_components(const GridDiagram& g);

/// Half the signed crossing count between components i and j; verticals
/// (oriented O to X) cross over horizontals (oriented X to O).
int linking_number(const GridDiagram& g, const ComponentPartition& parts,
                   int i, int j);

LinkingMatrix linking_matrix(const GridDiagram& g,
                             const ComponentPartition& parts);

/// Block-diagonal union: g2's rows and columns are offset by g1.n.
GridDiagram disjoint_union(const GridDiagram& g1, const GridDiagram& g2);

/// Deletes all rows/columns owned by component i and compacts indices.
GridDiagram remove_component(const GridDiagram& g, int i);

}  // namespace gridfloer
