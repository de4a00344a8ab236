#include "gridfloer/action.hpp"

#include <algorithm>
#include <cassert>

namespace gridfloer {

ConnectingPath default_path(const GridDiagram& g, const ComponentPartition& parts,
                            int c1, int c2) {
    if (c1 == c2) throw SameComponent("connecting path: components equal (" + std::to_string(c1) + ")");
    if (c1 < 0 || c1 >= parts.count || c2 < 0 || c2 >= parts.count)
        throw InvalidComponent("connecting path: component index out of range");
    const int n = g.n;
    int jx = -1, jo = -1;
    for (int j = 0; j < n && (jx < 0 || jo < 0); ++j) {
        if (jx < 0 && parts.column_owner[j] == c1) jx = j;
        if (jo < 0 && parts.column_owner[j] == c2) jo = j;
    }
    ConnectingPath path{c1, c2, {}};
    const int from_row = g.x_rows[jx];
    const int to_row = g.o_rows[jo];
    const int steps = (to_row - from_row + n) % n;
    for (int s = 1; s <= steps; ++s)
        path.crossings.push_back(PathCrossing{jx, (from_row + s) % n});
    return path;
}

namespace {

bool in_cyclic_span(int value, int lo, int span, int n) {
    return (value - lo + n) % n < span;
}

// Intersections (mod 2) of the path with the two horizontal boundary edges
// of the rectangle.
int path_weight(const ConnectingPath& path, const Rect& r, int n) {
    const int colspan = (r.col1 - r.col0 + n) % n;
    int w = 0;
    for (const PathCrossing& c : path.crossings) {
        if (c.circle != r.row0 && c.circle != r.row1) continue;
        if (in_cyclic_span(c.column, r.col0, colspan, n)) ++w;
    }
    return w & 1;
}

using SparseMap = std::vector<std::vector<uint32_t>>;

// Level matrix of a sparse degree -1 map, rows = sources at this level.
gf2::BitMatrix level_matrix(const BlockedComplex& complex, const SparseMap& map,
                            const std::vector<uint32_t>& level, std::size_t target_size) {
    gf2::BitMatrix m(level.size(), std::max<std::size_t>(target_size, 1));
    for (std::size_t r = 0; r < level.size(); ++r)
        for (uint32_t t : map[level[r]]) m.set(r, complex.pos_in_level[t]);
    return m;
}

gf2::BitMatrix multiply(const gf2::BitMatrix& a, const gf2::BitMatrix& b) {
    gf2::BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const uint64_t* row = a.row(i);
        for (std::size_t w = 0; w < a.words(); ++w) {
            uint64_t bits = row[w];
            while (bits) {
                const std::size_t j = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (j < b.rows())
                    for (std::size_t k = 0; k < b.words(); ++k) c.row(i)[k] ^= b.row(j)[k];
            }
        }
    }
    return c;
}

bool is_zero(const gf2::BitMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t w = 0; w < m.words(); ++w)
            if (m.row(i)[w]) return false;
    return true;
}

struct LevelHomology {
    // Reducer spanning cycles: boundary rows first (aux 0), then chosen
    // representatives (aux = rep coordinate).
    gf2::Reducer reducer;
    std::vector<std::vector<uint64_t>> rep_chains;  // in level coordinates
    std::vector<long long> rep_global;              // global generator ids

    explicit LevelHomology(std::size_t cols, std::size_t max_reps)
        : reducer(std::max<std::size_t>(cols, 1), std::max<std::size_t>(max_reps, 1)) {}
};

}  // namespace

ActionOperator homology_action(const BlockedComplex& complex, const ConnectingPath& path) {
    const GridDiagram& g = complex.diagram;
    const int n = g.n;

    // Chain-level action: same empty rectangles as the differential,
    // weighted by the path crossing count mod 2.
    SparseMap chain_map(complex.states.size());
    {
        std::vector<uint32_t> targets;
        for (uint32_t id = 0; id < complex.states.size(); ++id) {
            GridState x = unpack_state(complex.states[id], n);
            targets.clear();
            for_each_empty_rectangle(g, x, [&](const GridState& y, const Rect& r) {
                if (path_weight(path, r, n)) targets.push_back(complex.index.at(pack_state(y)));
            });
            std::sort(targets.begin(), targets.end());
            std::vector<uint32_t>& out = chain_map[id];
            for (std::size_t i = 0; i < targets.size();) {
                std::size_t j = i;
                while (j < targets.size() && targets[j] == targets[i]) ++j;
                if ((j - i) % 2) out.push_back(targets[i]);
                i = j;
            }
        }
    }

    ActionOperator op;
    op.pair_from = path.from_component;
    op.pair_to = path.to_component;

    // Per block: level matrices, chain-map check, homology bases, induced map.
    struct RepRef {
        std::size_t block;
        int maslov;
        std::size_t k;
    };
    std::vector<RepRef> generators;
    std::vector<std::map<int, LevelHomology>> homology(complex.blocks.size());

    for (std::size_t bi = 0; bi < complex.blocks.size(); ++bi) {
        const auto& block = complex.blocks[bi];
        // boundary and action matrices per level
        std::map<int, gf2::BitMatrix> d_mats, x_mats;
        for (auto it = block.levels.begin(); it != block.levels.end(); ++it) {
            auto below = std::next(it);
            const std::size_t tsize =
                (below != block.levels.end() && below->first == it->first - 1)
                    ? below->second.size()
                    : 0;
            d_mats.emplace(it->first, level_matrix(complex, complex.boundary, it->second, tsize));
            x_mats.emplace(it->first, level_matrix(complex, chain_map, it->second, tsize));
        }

        // X d = d X on every level (both sides map level m to level m-2).
        for (auto it = block.levels.begin(); it != block.levels.end(); ++it) {
            auto below = std::next(it);
            if (below == block.levels.end() || below->first != it->first - 1) continue;
            gf2::BitMatrix lhs = multiply(d_mats.at(it->first), x_mats.at(below->first));
            gf2::BitMatrix rhs = multiply(x_mats.at(it->first), d_mats.at(below->first));
            for (std::size_t i = 0; i < lhs.rows(); ++i)
                for (std::size_t w = 0; w < lhs.words(); ++w)
                    if (lhs.row(i)[w] != rhs.row(i)[w])
                        throw NotChainMap("homology_action: chain-level action does not commute "
                                          "with the differential");
        }

        // Homology basis per level: boundaries first, then kernel vectors.
        for (auto it = block.levels.begin(); it != block.levels.end(); ++it) {
            const int m = it->first;
            const std::size_t sz = it->second.size();
            LevelHomology lh(sz, sz);
            // boundaries from above
            auto above = block.levels.find(m + 1);
            if (above != block.levels.end()) {
                const gf2::BitMatrix& dm = d_mats.at(m + 1);
                for (std::size_t r = 0; r < dm.rows(); ++r) {
                    std::vector<uint64_t> vec(dm.row(r), dm.row(r) + dm.words());
                    vec.resize(lh.reducer.vec_words(), 0);
                    lh.reducer.insert(std::move(vec),
                                      std::vector<uint64_t>(lh.reducer.aux_words(), 0));
                }
            }
            // kernel of the outgoing boundary
            const gf2::BitMatrix& dout = d_mats.at(m);
            gf2::Reducer ker(std::max<std::size_t>(dout.cols(), 1), sz);
            for (std::size_t r = 0; r < sz; ++r) {
                std::vector<uint64_t> vec(dout.row(r), dout.row(r) + dout.words());
                std::vector<uint64_t> aux(ker.aux_words(), 0);
                aux[r >> 6] |= uint64_t{1} << (r & 63);
                int p = ker.reduce(vec, aux);
                if (p < 0) {
                    // aux is a cycle; adopt as representative if new mod
                    // boundaries and earlier representatives
                    std::vector<uint64_t> chain = aux;
                    chain.resize(lh.reducer.vec_words(), 0);
                    std::vector<uint64_t> rep_aux(lh.reducer.aux_words(), 0);
                    const std::size_t k = lh.rep_chains.size();
                    rep_aux[k >> 6] |= uint64_t{1} << (k & 63);
                    if (lh.reducer.insert(chain, rep_aux)) {
                        lh.rep_chains.push_back(std::move(chain));
                        lh.rep_global.push_back((long long)generators.size());
                        generators.push_back(RepRef{bi, m, k});
                    }
                } else {
                    ker.insert(std::move(vec), std::move(aux));
                }
            }
            homology[bi].emplace(m, std::move(lh));
        }
    }

    const std::size_t dim = generators.size();
    op.dim = (long long)dim;
    op.matrix = gf2::BitMatrix(std::max<std::size_t>(dim, 1), std::max<std::size_t>(dim, 1));

    // Induced map: apply the chain map to each representative and express
    // the image in the homology basis one level down.
    for (std::size_t gidx = 0; gidx < dim; ++gidx) {
        const RepRef ref = generators[gidx];
        const auto& block = complex.blocks[ref.block];
        const auto& level = block.levels.at(ref.maslov);
        auto below_it = homology[ref.block].find(ref.maslov - 1);
        if (below_it == homology[ref.block].end()) continue;  // image space empty
        const auto& below_level = block.levels.at(ref.maslov - 1);

        const std::vector<uint64_t>& chain = homology[ref.block].at(ref.maslov).rep_chains[ref.k];
        std::vector<uint64_t> image((below_level.size() + 63) / 64 + 1, 0);
        for (std::size_t r = 0; r < level.size(); ++r) {
            if (!((chain[r >> 6] >> (r & 63)) & 1)) continue;
            for (uint32_t t : chain_map[level[r]]) {
                const uint32_t p = complex.pos_in_level[t];
                image[p >> 6] ^= uint64_t{1} << (p & 63);
            }
        }
        LevelHomology& lh = below_it->second;
        image.resize(lh.reducer.vec_words(), 0);
        std::vector<uint64_t> coords(lh.reducer.aux_words(), 0);
        int residue = lh.reducer.reduce(image, coords);
        if (residue >= 0)
            throw NotChainMap("homology_action: image of a cycle is not a cycle mod boundaries");
        for (std::size_t k = 0; k < lh.rep_chains.size(); ++k)
            if ((coords[k >> 6] >> (k & 63)) & 1) op.matrix.set(gidx, (std::size_t)lh.rep_global[k]);
    }

    op.rank = (long long)gf2::rank(op.matrix);
    if (dim > 0) {
        gf2::BitMatrix squared = multiply(op.matrix, op.matrix);
        op.squared_zero = is_zero(squared);
    } else {
        op.squared_zero = true;
    }
    return op;
}

ActionOperator homology_action(const GridDiagram& g, int c1, int c2,
                               const ComplexOptions& opts) {
    BlockedComplex complex = build_complex(g, opts);
    ConnectingPath path = default_path(g, complex.parts, c1, c2);
    return homology_action(complex, path);
}

FreeVerdict is_free_module(const ActionOperator& op) {
    return FreeVerdict{2 * op.rank == op.dim, op.dim, op.rank};
}

}  // namespace gridfloer
