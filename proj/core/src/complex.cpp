#include "gridfloer/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>

#include "gridfloer/gf2.hpp"

namespace gridfloer {

uint64_t pack_state(const GridState& x) {
    uint64_t packed = 0;
    for (std::size_t j = 0; j < x.size(); ++j) packed |= (uint64_t)x[j] << (4 * j);
    return packed;
}

GridState unpack_state(uint64_t packed, int n) {
    GridState x(n);
    for (int j = 0; j < n; ++j) x[j] = (packed >> (4 * j)) & 0xf;
    return x;
}

long long MultigradedRanks::total() const {
    long long t = 0;
    for (const auto& [h, r] : entries) t += r;
    return t;
}

std::size_t default_max_states() {
    if (const char* env = std::getenv("GRIDFLOER_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (std::size_t)v;
    }
    return 40320;  // 8!
}

namespace {

// Doubled planar coordinates: state points at (2j, 2r), markings at
// (2j+1, 2r+1). I(P,Q) counts pairs with p strictly southwest of q.
struct Point {
    int x, y;
};

long long count_sw(const std::vector<Point>& p, const std::vector<Point>& q) {
    long long c = 0;
    for (const Point& a : p)
        for (const Point& b : q)
            if (a.x < b.x && a.y < b.y) ++c;
    return c;
}

// J2 = I(P,Q) + I(Q,P) = 2 J(P,Q).
long long j2(const std::vector<Point>& p, const std::vector<Point>& q) {
    return count_sw(p, q) + count_sw(q, p);
}

struct GradingContext {
    int n = 0;
    std::vector<Point> os, xs;                 // all markings
    std::vector<std::vector<Point>> os_comp, xs_comp;  // per component
    std::vector<long long> marking_term;       // per component, state-free part of alex4
    long long j2_oo = 0;
};

GradingContext make_context(const GridDiagram& g, const ComponentPartition& parts) {
    GradingContext ctx;
    ctx.n = g.n;
    ctx.os_comp.resize(parts.count);
    ctx.xs_comp.resize(parts.count);
    for (int j = 0; j < g.n; ++j) {
        Point o{2 * j + 1, 2 * g.o_rows[j] + 1};
        Point x{2 * j + 1, 2 * g.x_rows[j] + 1};
        ctx.os.push_back(o);
        ctx.xs.push_back(x);
        ctx.os_comp[parts.column_owner[j]].push_back(o);
        ctx.xs_comp[parts.column_owner[j]].push_back(x);
    }
    ctx.j2_oo = j2(ctx.os, ctx.os);
    ctx.marking_term.resize(parts.count);
    for (int i = 0; i < parts.count; ++i) {
        ctx.marking_term[i] = -j2(ctx.xs, ctx.xs_comp[i]) + j2(ctx.xs, ctx.os_comp[i]) -
                              j2(ctx.os, ctx.xs_comp[i]) + j2(ctx.os, ctx.os_comp[i]) -
                              2LL * (parts.marks_per_component[i] - 1);
    }
    return ctx;
}

MultiGrading grade_with_context(const GradingContext& ctx, const ComponentPartition& parts,
                                const GridState& x) {
    std::vector<Point> pts(ctx.n);
    for (int j = 0; j < ctx.n; ++j) pts[j] = Point{2 * j, 2 * x[j]};

    const long long i_xx = count_sw(pts, pts);
    const long long j2_xo = j2(pts, ctx.os);

    MultiGrading h;
    h.maslov = (int)(i_xx - j2_xo + ctx.j2_oo / 2 + 1);

    h.alex2.resize(parts.count);
    for (int i = 0; i < parts.count; ++i) {
        const long long alex4 = 2 * j2(pts, ctx.xs_comp[i]) - 2 * j2(pts, ctx.os_comp[i]) +
                                ctx.marking_term[i];
        assert(alex4 % 2 == 0);
        h.alex2[i] = (int)(alex4 / 2);
    }
    return h;
}

}  // namespace

MultiGrading grade_state(const GridDiagram& g, const ComponentPartition& parts,
                         const GridState& x) {
    GradingContext ctx = make_context(g, parts);
    return grade_with_context(ctx, parts, x);
}

MultiGrading grade_state(const GridDiagram& g, const GridState& x) {
    return grade_state(g, trace_components(g), x);
}

BlockedComplex build_complex(const GridDiagram& g, const ComplexOptions& opts) {
    g.validate();
    std::size_t nstates = 1;
    for (int k = 2; k <= g.n; ++k) {
        if (nstates > opts.max_states / k + 1) {
            nstates = opts.max_states + 1;
            break;
        }
        nstates *= k;
    }
    if (nstates > opts.max_states)
        throw GridTooLarge("grid size " + std::to_string(g.n) + " exceeds the state limit of " +
                           std::to_string(opts.max_states) + " states");

    BlockedComplex complex;
    complex.diagram = g;
    complex.parts = trace_components(g);
    const GradingContext ctx = make_context(g, complex.parts);

    GridState perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<int>, uint32_t> block_ids;
    do {
        const uint32_t id = (uint32_t)complex.states.size();
        complex.states.push_back(pack_state(perm));
        complex.index.emplace(complex.states.back(), id);
        MultiGrading h = grade_with_context(ctx, complex.parts, perm);
        auto [it, inserted] = block_ids.emplace(h.alex2, (uint32_t)complex.blocks.size());
        if (inserted) complex.blocks.push_back(BlockedComplex::Block{h.alex2, {}});
        complex.block_of.push_back(it->second);
        complex.blocks[it->second].levels[h.maslov].push_back(id);
        complex.gradings.push_back(std::move(h));
    } while (std::next_permutation(perm.begin(), perm.end()));

    complex.pos_in_level.resize(complex.states.size());
    for (const auto& block : complex.blocks)
        for (const auto& [m, level] : block.levels)
            for (uint32_t i = 0; i < level.size(); ++i) complex.pos_in_level[level[i]] = i;

    // Boundary: mod-2 count of empty rectangles. The two rectangles of a
    // column pair hit the same target, so accumulate and reduce.
    complex.boundary.resize(complex.states.size());
    std::vector<uint32_t> targets;
    for (uint32_t id = 0; id < complex.states.size(); ++id) {
        GridState x = unpack_state(complex.states[id], g.n);
        targets.clear();
        for_each_empty_rectangle(g, x, [&](const GridState& y, const Rect&) {
            targets.push_back(complex.index.at(pack_state(y)));
        });
        std::sort(targets.begin(), targets.end());
        std::vector<uint32_t>& out = complex.boundary[id];
        for (std::size_t i = 0; i < targets.size();) {
            std::size_t j = i;
            while (j < targets.size() && targets[j] == targets[i]) ++j;
            if ((j - i) % 2) out.push_back(targets[i]);
            i = j;
        }
#ifndef NDEBUG
        for (uint32_t t : out) {
            assert(complex.gradings[t].alex2 == complex.gradings[id].alex2);
            assert(complex.gradings[t].maslov == complex.gradings[id].maslov - 1);
        }
#endif
    }
    return complex;
}

namespace {

// Boundary matrix from the given level to the next one down, rows = sources.
gf2::BitMatrix level_matrix(const BlockedComplex& complex, const std::vector<uint32_t>& level,
                            std::size_t target_size) {
    gf2::BitMatrix m(level.size(), std::max<std::size_t>(target_size, 1));
    for (std::size_t r = 0; r < level.size(); ++r)
        for (uint32_t t : complex.boundary[level[r]]) m.set(r, complex.pos_in_level[t]);
    return m;
}

}  // namespace

MultigradedRanks homology_ranks(const BlockedComplex& complex) {
    MultigradedRanks out;
    out.n = complex.diagram.n;
    out.components = complex.parts.count;
    out.marks_per_component = complex.parts.marks_per_component;

    for (const auto& block : complex.blocks) {
        // rank of the boundary leaving each level
        std::map<int, std::size_t> out_rank;
        for (auto it = block.levels.begin(); it != block.levels.end(); ++it) {
            auto below = std::next(it);
            const std::size_t target_size =
                (below != block.levels.end() && below->first == it->first - 1)
                    ? below->second.size()
                    : 0;
            if (target_size == 0) {
                out_rank[it->first] = 0;
                continue;
            }
            gf2::BitMatrix m = level_matrix(complex, it->second, target_size);
            out_rank[it->first] = gf2::rank_destructive(m);
        }
        for (const auto& [m, level] : block.levels) {
            auto above = out_rank.find(m + 1);
            const std::size_t incoming = above == out_rank.end() ? 0 : above->second;
            const long long dim = (long long)level.size() - (long long)out_rank[m] -
                                  (long long)incoming;
            assert(dim >= 0);
            if (dim > 0) out.entries[MultiGrading{m, block.alex2}] += dim;
        }
    }
    return out;
}

MultigradedRanks tilde_homology(const GridDiagram& g, const ComplexOptions& opts) {
    return homology_ranks(build_complex(g, opts));
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Expansion of prod_i (1 + q^{-1} t_i^{-2})^{marks_i - 1}: grading offsets
// with multiplicities.
std::vector<std::pair<MultiGrading, long long>> tensor_factor_terms(
    const std::vector<int>& marks) {
    std::vector<std::pair<MultiGrading, long long>> terms;
    terms.push_back({MultiGrading{0, std::vector<int>(marks.size(), 0)}, 1});
    for (std::size_t i = 0; i < marks.size(); ++i) {
        std::vector<std::pair<MultiGrading, long long>> next;
        for (int k = 0; k <= marks[i] - 1; ++k) {
            const long long c = binomial(marks[i] - 1, k);
            for (const auto& [h, coeff] : terms) {
                MultiGrading nh = h;
                nh.maslov -= k;
                nh.alex2[i] -= 2 * k;
                next.push_back({std::move(nh), coeff * c});
            }
        }
        terms = std::move(next);
    }
    return terms;
}

}  // namespace

MultigradedRanks hat_ranks(const MultigradedRanks& tilde) {
    const auto divisor = tensor_factor_terms(tilde.marks_per_component);

    MultigradedRanks out;
    out.n = tilde.n;
    out.components = tilde.components;
    out.marks_per_component = tilde.marks_per_component;

    std::map<MultiGrading, long long, GradingOrder> work(tilde.entries.begin(),
                                                         tilde.entries.end());
    int min_maslov = 0;
    for (const auto& [h, r] : tilde.entries) min_maslov = std::min(min_maslov, h.maslov);
    while (!work.empty()) {
        // Greatest remaining term: maximal maslov. Every divisor term other
        // than the unit strictly lowers maslov, so this term belongs to the
        // quotient with its full coefficient.
        auto it = work.begin();
        const MultiGrading lead = it->first;
        const long long coeff = it->second;
        if (coeff < 0 || lead.maslov < min_maslov)
            throw NotDivisible("hat_ranks: table is not divisible by the tensor factors (maslov " +
                               std::to_string(lead.maslov) + ")");
        out.entries[lead] = coeff;
        for (const auto& [dh, dc] : divisor) {
            MultiGrading h = lead;
            h.maslov += dh.maslov;
            for (std::size_t i = 0; i < h.alex2.size(); ++i) h.alex2[i] += dh.alex2[i];
            auto wit = work.find(h);
            const long long nv = (wit == work.end() ? 0 : wit->second) - coeff * dc;
            if (nv == 0) {
                if (wit != work.end()) work.erase(wit);
            } else if (wit == work.end()) {
                work.emplace(std::move(h), nv);
            } else {
                wit->second = nv;
            }
        }
    }
    return out;
}

}  // namespace gridfloer
