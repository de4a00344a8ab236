#pragma once

#include "gridfloer/complex.hpp"
#include "gridfloer/gf2.hpp"

namespace gridfloer {

/// One transversal crossing of the path with a horizontal grid circle:
/// the path passes through column coordinate column + 1/2 at height circle.
struct PathCrossing {
    int column = 0;
    int circle = 0;
};

/// A relative 1-cycle from an X-cell of one component to an O-cell of
/// another, traversing cell centers. Only the horizontal-circle crossings
/// matter for the action, so that is all we store.
struct ConnectingPath {
    int from_component = 0;
    int to_component = 0;
    std::vector<PathCrossing> crossings;
};

/// Vertical-then-horizontal staircase between the smallest-column X cell of
/// c1 and the smallest-column O cell of c2.
ConnectingPath default_path(const GridDiagram& g, const ComponentPartition& parts,
                            int c1, int c2);

/// GF(2) operator induced on homology by a connecting path. Block-diagonal
/// in alex2 and drops maslov by 1.
struct ActionOperator {
    int pair_from = 0;
    int pair_to = 0;
    long long dim = 0;   // total homology dimension
    long long rank = 0;  // rank of the induced operator
    bool squared_zero = false;
    gf2::BitMatrix matrix;  // row g = image of homology generator g
};

ActionOperator homology_action(const BlockedComplex& complex, const ConnectingPath& path);
ActionOperator homology_action(const GridDiagram& g, int c1, int c2,
                               const ComplexOptions& opts = {});

struct FreeVerdict {
    bool free = false;
    long long dim = 0;
    long long rank = 0;
};

/// Free over F[X]/(X^2) iff the action rank is half the dimension.
FreeVerdict is_free_module(const ActionOperator& op);

}  // namespace gridfloer
