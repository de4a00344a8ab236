#include "gridfloer/corpus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gridfloer/action.hpp"
#include "gridfloer/complex.hpp"
#include "gridfloer/detect.hpp"
#include "gridfloer/polytope.hpp"

namespace gridfloer {

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = {
        {"unknot2", "n=2\nO: 1 0\nX: 0 1\nname=unknot2\n", true, false},
        {"unknot-stabilized", "n=3\nO: 1 2 0\nX: 0 1 2\nname=unknot-stabilized\n", true, false},
        {"hopf", "n=4\nO: 2 3 0 1\nX: 0 1 2 3\nname=hopf\n", false, false},
        {"unlink2", "n=4\nO: 1 0 3 2\nX: 0 1 2 3\nname=unlink2\n", true, true},
        {"trefoil", "n=5\nO: 2 3 4 0 1\nX: 0 1 2 3 4\nname=trefoil\n", false, false},
        {"hopf-disjoint-unknot", "n=6\nO: 2 3 0 1 5 4\nX: 0 1 2 3 4 5\nname=hopf-disjoint-unknot\n",
         false, true},
        {"l6a2", "n=8\nO: 4 1 3 2 0 7 5 6\nX: 0 5 6 7 4 3 2 1\nname=l6a2\n", false, false},
    };
    return entries;
}

GridDiagram corpus_grid(const std::string& name) {
    for (const CorpusEntry& e : corpus_entries())
        if (e.name == name) return parse_grid(e.text);
    throw ParseError("corpus: no bundled diagram named '" + name + "'");
}

namespace {

struct Computed {
    GridDiagram g;
    BlockedComplex complex;
    MultigradedRanks tilde;
    MultigradedRanks hat;
    ComponentPartition parts;
};

Computed compute(const GridDiagram& g) {
    Computed c;
    c.g = g;
    c.complex = build_complex(g);
    c.tilde = homology_ranks(c.complex);
    c.hat = hat_ranks(c.tilde);
    c.parts = c.complex.parts;
    return c;
}

// Alternative connecting path: largest-column markings, descending route.
ConnectingPath detoured_path(const GridDiagram& g, const ComponentPartition& parts,
                             int c1, int c2) {
    const int n = g.n;
    int jx = -1, jo = -1;
    for (int j = 0; j < n; ++j) {
        if (parts.column_owner[j] == c1) jx = j;
        if (parts.column_owner[j] == c2) jo = j;
    }
    ConnectingPath path{c1, c2, {}};
    const int from = g.x_rows[jx];
    const int to = g.o_rows[jo];
    const int steps = (from - to + n) % n;
    for (int s = 0; s < steps; ++s)
        path.crossings.push_back(PathCrossing{jx, (from - s + n) % n});
    return path;
}

bool same_matrix(const gf2::BitMatrix& a, const gf2::BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t w = 0; w < a.words(); ++w)
            if (a.row(i)[w] != b.row(i)[w]) return false;
    return true;
}

class Suite {
  public:
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        results_.push_back(CheckResult{name, pass, pass ? "" : detail});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    std::vector<CheckResult> results_;
};

void check_roundtrip(Suite& suite, const CorpusEntry& e, const Computed& c) {
    GridDiagram again = parse_grid(serialize_grid(c.g));
    suite.check(e.name + ": parse/serialize roundtrip",
                again.n == c.g.n && again.o_rows == c.g.o_rows && again.x_rows == c.g.x_rows &&
                    again.name == c.g.name,
                "reparsed diagram differs");
}

void check_d_squared(Suite& suite, const CorpusEntry& e, const Computed& c) {
    bool ok = true;
    std::vector<uint32_t> twice;
    for (uint32_t id = 0; id < c.complex.states.size() && ok; ++id) {
        twice.clear();
        for (uint32_t t : c.complex.boundary[id])
            twice.insert(twice.end(), c.complex.boundary[t].begin(), c.complex.boundary[t].end());
        std::sort(twice.begin(), twice.end());
        for (std::size_t i = 0; i < twice.size();) {
            std::size_t j = i;
            while (j < twice.size() && twice[j] == twice[i]) ++j;
            if ((j - i) % 2) {
                ok = false;
                break;
            }
            i = j;
        }
    }
    suite.check(e.name + ": boundary squares to zero", ok, "found a surviving double boundary");
}

void check_symmetry_parity(Suite& suite, const CorpusEntry& e, const Computed& c) {
    std::map<std::vector<int>, long long> by_alex;
    for (const auto& [h, r] : c.hat.entries) by_alex[h.alex2] += r;
    bool symmetric = true;
    for (const auto& [a, r] : by_alex) {
        std::vector<int> neg(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
        auto it = by_alex.find(neg);
        if (it == by_alex.end() || it->second != r) symmetric = false;
    }
    suite.check(e.name + ": hat ranks centrally symmetric", symmetric, "rank table asymmetric");

    const long long lfr = c.hat.total();
    const bool parity_ok = (c.parts.count == 1) ? (lfr % 2 == 1) : (lfr % 2 == 0);
    suite.check(e.name + ": link Floer rank parity", parity_ok,
                "lfr " + std::to_string(lfr) + " with " + std::to_string(c.parts.count) +
                    " components");
}

void check_rank_inequalities(Suite& suite, const CorpusEntry& e, const Computed& c) {
    const long long lfr = c.hat.total();
    const long long bound = 1LL << (c.parts.count - 1);
    const bool chained = e.is_unlink ? (lfr == bound) : (lfr > bound);
    suite.check(e.name + ": chained rank bound", chained,
                "lfr " + std::to_string(lfr) + " vs 2^(l-1) = " + std::to_string(bound));

    for (int i = 0; i < c.parts.count && c.parts.count >= 2; ++i) {
        Computed sub = compute(remove_component(c.g, i));
        suite.check(e.name + ": rank inequality removing component " + std::to_string(i),
                    lfr >= 2 * sub.hat.total(),
                    "lfr " + std::to_string(lfr) + " < 2 * " + std::to_string(sub.hat.total()));
        suite.check(e.name + ": component count drops by one removing " + std::to_string(i),
                    sub.parts.count == c.parts.count - 1, "unexpected component count");
    }
}

void check_action(Suite& suite, const CorpusEntry& e, const Computed& c) {
    if (c.parts.count < 2) return;
    bool any_free = false;
    for (int a = 0; a < c.parts.count; ++a) {
        for (int b = a + 1; b < c.parts.count; ++b) {
            ActionOperator op =
                homology_action(c.complex, default_path(c.g, c.parts, a, b));
            const std::string pair = std::to_string(a) + "," + std::to_string(b);
            suite.check(e.name + ": action nilpotent on pair " + pair, op.squared_zero,
                        "operator squared nonzero");
            ActionOperator alt =
                homology_action(c.complex, detoured_path(c.g, c.parts, a, b));
            suite.check(e.name + ": action path independent on pair " + pair,
                        same_matrix(op.matrix, alt.matrix), "detoured path gives a different map");
            if (is_free_module(op).free) any_free = true;
        }
    }
    suite.check(e.name + ": split verdict", any_free == e.is_split,
                std::string("expected ") + (e.is_split ? "split" : "nonsplit"));
}

void check_polytope(Suite& suite, const CorpusEntry& e, const Computed& c) {
    LinkingMatrix lk = linking_matrix(c.g, c.parts);
    LinkPolytopeReport rep = link_floer_polytope(c.hat, lk);

    LatticePolytope rehull = convex_vertices(rep.polytope.vertices, rep.polytope.dim);
    suite.check(e.name + ": hull idempotence", rehull.vertices == rep.polytope.vertices,
                "re-hulling the vertex set changed it");

    if (rep.dual_thurston_valid) {
        LatticePolytope sum =
            minkowski_sum(rep.dual_thurston, axis_cube(rep.polytope.dim, 2));
        suite.check(e.name + ": erosion reconstruction", sum.vertices == rep.polytope.vertices,
                    "erosion plus cube does not rebuild the polytope");
    }

    // Nonsplit links without trivial components: at least 2^l vertices and
    // full dimension.
    if (!e.is_split && !e.is_unlink && c.parts.count >= 2) {
        suite.check(e.name + ": vertex count at least 2^l",
                    rep.shape.vertex_count >= (std::size_t)(1 << c.parts.count),
                    "too few vertices: " + std::to_string(rep.shape.vertex_count));
        suite.check(e.name + ": polytope full-dimensional", rep.shape.is_full_dimensional,
                    "degenerate link Floer polytope");
    }
}

void check_euler(Suite& suite, const CorpusEntry& e, const Computed& c) {
    EulerAlexander ea = euler_and_alexander(c.hat);
    bool symmetric = true;
    for (const auto& [exp, coeff] : ea.chi) {
        std::vector<int> neg(exp.size());
        for (std::size_t k = 0; k < exp.size(); ++k) neg[k] = -exp[k];
        auto it = ea.chi.find(neg);
        const long long mirrored = it == ea.chi.end() ? 0 : it->second;
        if (mirrored != coeff && mirrored != -coeff) symmetric = false;
    }
    suite.check(e.name + ": Euler characteristic symmetric up to sign", symmetric,
                "chi not symmetric under exponent negation");
}

void check_pair(Suite& suite, const Computed& a, const Computed& b) {
    const std::string name = a.g.name + " | " + b.g.name;
    Computed u = compute(disjoint_union(a.g, b.g));

    suite.check(name + ": disjoint union rank formula",
                u.hat.total() == 2 * a.hat.total() * b.hat.total(),
                "lfr " + std::to_string(u.hat.total()) + " != 2*" +
                    std::to_string(a.hat.total()) + "*" + std::to_string(b.hat.total()));

    // Full tensor identity: each grading pair contributes its product rank
    // twice, at maslov offsets 0 and -1.
    std::map<MultiGrading, long long, GradingOrder> expected;
    for (const auto& [ha, ra] : a.hat.entries)
        for (const auto& [hb, rb] : b.hat.entries) {
            MultiGrading h;
            h.alex2 = ha.alex2;
            h.alex2.insert(h.alex2.end(), hb.alex2.begin(), hb.alex2.end());
            for (int d = 0; d >= -1; --d) {
                h.maslov = ha.maslov + hb.maslov + d;
                expected[h] += ra * rb;
            }
        }
    suite.check(name + ": disjoint union tensor identity", expected == u.hat.entries,
                "multigraded rank tables differ");

    // Linking numbers vanish across the blocks.
    LinkingMatrix lk = linking_matrix(u.g, u.parts);
    bool cross_zero = true;
    for (int i = 0; i < a.parts.count; ++i)
        for (int j = a.parts.count; j < u.parts.count; ++j)
            if (lk.lk[i][j] != 0) cross_zero = false;
    suite.check(name + ": cross-block linking zero", cross_zero, "nonzero cross linking number");
}

}  // namespace

std::vector<CheckResult> run_corpus_suite() {
    Suite suite;
    std::vector<Computed> computed;
    for (const CorpusEntry& e : corpus_entries()) {
        Computed c = compute(parse_grid(e.text));
        check_roundtrip(suite, e, c);
        check_d_squared(suite, e, c);
        check_symmetry_parity(suite, e, c);
        check_rank_inequalities(suite, e, c);
        check_action(suite, e, c);
        check_polytope(suite, e, c);
        check_euler(suite, e, c);
        computed.push_back(std::move(c));
    }

    const std::size_t cap = default_max_states();
    for (std::size_t i = 0; i < computed.size(); ++i)
        for (std::size_t j = i; j < computed.size(); ++j) {
            const int n = computed[i].g.n + computed[j].g.n;
            std::size_t states = 1;
            for (int k = 2; k <= n && states <= cap; ++k) states *= k;
            if (n <= 8 && states <= cap) check_pair(suite, computed[i], computed[j]);
        }
    return suite.take();
}

}  // namespace gridfloer
