#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "gridfloer/grid.hpp"

namespace gridfloer {

/// Generator of the grid chain complex: column j sits at row assignment[j].
using GridState = std::vector<uint8_t>;

uint64_t pack_state(const GridState& x);
GridState unpack_state(uint64_t packed, int n);

/// Maslov grading plus the doubled Alexander multigrading (alex2 = 2A).
struct MultiGrading {
    int maslov = 0;
    std::vector<int> alex2;

    bool operator==(const MultiGrading&) const = default;
};

/// Output order: maslov descending, then alex2 lexicographic.
struct GradingOrder {
    bool operator()(const MultiGrading& a, const MultiGrading& b) const {
        if (a.maslov != b.maslov) return a.maslov > b.maslov;
        return a.alex2 < b.alex2;
    }
};

struct MultigradedRanks {
    int n = 0;
    int components = 0;
    std::vector<int> marks_per_component;
    std::map<MultiGrading, long long, GradingOrder> entries;

    long long total() const;
};

/// Maximum number of grid states a single computation may enumerate.
/// GRIDFLOER_MAX_STATES overrides the default of 8! = 40320.
std::size_t default_max_states();

struct ComplexOptions {
    std::size_t max_states = default_max_states();
};

MultiGrading grade_state(const GridDiagram& g, const ComponentPartition& parts,
                         const GridState& x);
MultiGrading grade_state(const GridDiagram& g, const GridState& x);

/// Toroidal rectangle with cyclic column span [col0, col1) and row span
/// [row0, row1); its corners (col0,row0) and (col1,row1) lie on the source
/// state.
struct Rect {
    int col0, col1, row0, row1;
};

/// Visits every empty rectangle leaving x: interiors free of X, O and state
/// points. cb(target_state, rect) is called once per rectangle; the two
/// rectangles of a column pair go to the same target.
template <typename F>
void for_each_empty_rectangle(const GridDiagram& g, const GridState& x, F&& cb) {
    const int n = g.n;
    for (int c0 = 0; c0 < n; ++c0) {
        for (int c1 = 0; c1 < n; ++c1) {
            if (c0 == c1) continue;
            const int a = x[c0], b = x[c1];
            const int colspan = (c1 - c0 + n) % n;
            const int rowspan = (b - a + n) % n;
            bool blocked = false;
            for (int dc = 0; dc < colspan && !blocked; ++dc) {
                const int c = (c0 + dc) % n;
                const int xr = (g.x_rows[c] - a + n) % n;
                const int orr = (g.o_rows[c] - a + n) % n;
                if (xr < rowspan || orr < rowspan) {
                    blocked = true;
                    break;
                }
                if (dc > 0) {
                    const int sr = (x[c] - a + n) % n;
                    if (sr < rowspan) blocked = true;
                }
            }
            if (blocked) continue;
            GridState y = x;
            std::swap(y[c0], y[c1]);
            cb(y, Rect{c0, c1, a, b});
        }
    }
}

/// The fully blocked grid complex, organized into alex2 blocks and Maslov
/// levels with the mod-2 boundary stored sparsely.
struct BlockedComplex {
    GridDiagram diagram;
    ComponentPartition parts;

    std::vector<uint64_t> states;  // packed, lexicographic order
    std::vector<MultiGrading> gradings;
    std::vector<std::vector<uint32_t>> boundary;  // per state, sorted target ids
    std::unordered_map<uint64_t, uint32_t> index;

    struct Block {
        std::vector<int> alex2;
        // maslov -> state ids, maslov descending
        std::map<int, std::vector<uint32_t>, std::greater<int>> levels;
    };
    std::vector<Block> blocks;
    std::vector<uint32_t> block_of;     // state id -> block index
    std::vector<uint32_t> pos_in_level;  // state id -> index within its level
};

BlockedComplex build_complex(const GridDiagram& g, const ComplexOptions& opts = {});

/// Multigraded homology ranks of an already-built complex.
MultigradedRanks homology_ranks(const BlockedComplex& complex);

/// Generators, gradings and blocked GF(2) homology of the fully blocked
/// grid complex.
MultigradedRanks tilde_homology(const GridDiagram& g, const ComplexOptions& opts = {});

/// Peels off one 2-dimensional tensor factor per extra marking pair to
/// recover the hat-flavor link Floer ranks; total = lfr(L).
MultigradedRanks hat_ranks(const MultigradedRanks& tilde);

}  // namespace gridfloer
