#include "gridfloer/detect.hpp"

#include <algorithm>
#include <limits>

namespace gridfloer {

namespace {

void add_term(LaurentPoly& p, const std::vector<int>& e, long long c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else if ((it->second += c) == 0) {
        p.erase(it);
    }
}

// Exact division by (tau_var - tau_var^{-1}), peeling the term with the
// greatest exponent in the variable.
LaurentPoly divide_by_tau_factor(const LaurentPoly& p, int var) {
    if (p.empty()) return {};
    int min_e = std::numeric_limits<int>::max();
    for (const auto& [e, c] : p) min_e = std::min(min_e, e[var]);

    LaurentPoly rem = p, quot;
    while (!rem.empty()) {
        auto lead = rem.begin();
        for (auto it = std::next(rem.begin()); it != rem.end(); ++it)
            if (it->first[var] > lead->first[var]) lead = it;
        if (lead->first[var] < min_e)
            throw NotDivisible("euler_and_alexander: chi is not divisible by tau_" +
                               std::to_string(var) + " - tau_" + std::to_string(var) + "^-1");
        std::vector<int> qe = lead->first;
        const long long c = lead->second;
        qe[var] -= 1;
        add_term(quot, qe, c);
        std::vector<int> hi = qe, lo = qe;
        hi[var] += 1;
        lo[var] -= 1;
        add_term(rem, hi, -c);
        add_term(rem, lo, c);
    }
    return quot;
}

// Center the exponent support at the origin and make the leading (lex
// greatest) coefficient positive.
LaurentPoly normalize(LaurentPoly p, int vars) {
    if (p.empty()) return p;
    std::vector<int> lo(vars, std::numeric_limits<int>::max());
    std::vector<int> hi(vars, std::numeric_limits<int>::min());
    for (const auto& [e, c] : p)
        for (int k = 0; k < vars; ++k) {
            lo[k] = std::min(lo[k], e[k]);
            hi[k] = std::max(hi[k], e[k]);
        }
    LaurentPoly out;
    for (auto& [e, c] : p) {
        std::vector<int> shifted = e;
        for (int k = 0; k < vars; ++k) {
            // round the center toward zero so the shift is an honest unit
            const int s = lo[k] + hi[k];
            shifted[k] -= (s >= 0 ? s / 2 : -((-s) / 2));
        }
        out.emplace(std::move(shifted), c);
    }
    if (out.rbegin()->second < 0)
        for (auto& [e, c] : out) c = -c;
    return out;
}

}  // namespace

EulerAlexander euler_and_alexander(const MultigradedRanks& hat) {
    EulerAlexander out;
    for (const auto& [h, r] : hat.entries) {
        const long long sign = (h.maslov % 2 == 0) ? 1 : -1;
        add_term(out.chi, h.alex2, sign * r);
    }
    LaurentPoly alex = out.chi;
    if (hat.components > 1)
        for (int i = 0; i < hat.components; ++i) alex = divide_by_tau_factor(alex, i);
    out.alexander = normalize(std::move(alex), hat.components);
    return out;
}

namespace {

// Scan one connecting path per unordered component pair; the link is split
// iff some pair's action operator makes the homology a free module.
Verdict split_scan(const BlockedComplex& complex) {
    const int l = complex.parts.count;
    if (l < 2) return Verdict{false, "a knot has no separating sphere to find"};
    for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b) {
            ConnectingPath path = default_path(complex.diagram, complex.parts, a, b);
            ActionOperator op = homology_action(complex, path);
            FreeVerdict fv = is_free_module(op);
            if (fv.free)
                return Verdict{true, "action of the arc between components " + std::to_string(a) +
                                         " and " + std::to_string(b) + " has rank " +
                                         std::to_string(fv.rank) + " = dim/2 (free module)"};
        }
    return Verdict{false, "no component pair acts freely (rank < dim/2 for every arc)"};
}

}  // namespace

DetectionReport detect_all(const GridDiagram& g, const ComplexOptions& opts) {
    BlockedComplex complex = build_complex(g, opts);
    MultigradedRanks hat = hat_ranks(homology_ranks(complex));
    const int l = complex.parts.count;
    const long long lfr = hat.total();

    DetectionReport rep;
    rep.components = l;
    rep.lfr = lfr;
    rep.alexander = euler_and_alexander(hat).alexander;

    rep.is_unknot.value = (l == 1 && lfr == 1);
    rep.is_unknot.why = rep.is_unknot.value
                            ? "one component with link Floer rank 1"
                            : (l == 1 ? "rank " + std::to_string(lfr) + " > 1"
                                      : std::to_string(l) + " components");

    const long long unlink_rank = 1LL << (l - 1);
    rep.is_unlink.value = (lfr == unlink_rank);
    rep.is_unlink.why = "rank " + std::to_string(lfr) + (rep.is_unlink.value ? " = " : " > ") +
                        "2^(l-1) = " + std::to_string(unlink_rank);

    rep.is_hopf_link.value = (l == 2 && lfr == 4);
    rep.is_hopf_link.why = rep.is_hopf_link.value
                               ? "2 components with link Floer rank 4"
                               : "needs 2 components of rank 4, got " + std::to_string(l) +
                                     " of rank " + std::to_string(lfr);

    const long long second_rank = 1LL << l;
    rep.is_second_smallest_class.value = (l >= 2 && lfr == second_rank);
    rep.is_second_smallest_class.why =
        rep.is_second_smallest_class.value
            ? "rank-characterized class of the Hopf link joined with an unlink of " +
                  std::to_string(l - 2) + " components"
            : "rank " + std::to_string(lfr) + " != 2^l = " + std::to_string(second_rank);

    rep.is_split = split_scan(complex);

    // Top collapsed Alexander grading carries total rank 1.
    long long top = std::numeric_limits<long long>::min();
    long long top_rank = 0;
    for (const auto& [h, r] : hat.entries) {
        long long s = 0;
        for (int a : h.alex2) s += a;
        if (s > top) {
            top = s;
            top_rank = r;
        } else if (s == top) {
            top_rank += r;
        }
    }
    rep.fibered_top_certificate.value = (top_rank == 1);
    rep.fibered_top_certificate.why = "top collapsed grading " + std::to_string(top) +
                                      " carries rank " + std::to_string(top_rank);
    return rep;
}

AuditReport removal_audit(const GridDiagram& g, int i, const ComplexOptions& opts) {
    BlockedComplex complex = build_complex(g, opts);
    const int l = complex.parts.count;
    if (l < 2) throw LastComponent("removal_audit: cannot remove the last component");
    if (i < 0 || i >= l)
        throw InvalidComponent("removal_audit: component " + std::to_string(i) +
                               " out of range for " + std::to_string(l) + " components");

    MultigradedRanks hat = hat_ranks(homology_ranks(complex));
    LinkingMatrix lk = linking_matrix(g, complex.parts);

    GridDiagram sub = remove_component(g, i);
    BlockedComplex sub_complex = build_complex(sub, opts);
    MultigradedRanks sub_hat = hat_ranks(homology_ranks(sub_complex));

    AuditReport rep;
    rep.component = i;
    rep.lfr_link = hat.total();
    rep.lfr_sublink = sub_hat.total();
    rep.equality = (rep.lfr_link == 2 * rep.lfr_sublink);

    rep.shift_vector.assign(l, 0);
    for (int j = 0; j < l; ++j)
        if (j != i) rep.shift_vector[j] = -lk.lk[i][j];

    rep.observed.linking_zero = true;
    for (int j = 0; j < l; ++j)
        if (j != i && lk.lk[i][j] != 0) rep.observed.linking_zero = false;
    rep.observed.sublink_nonsplit =
        (sub_complex.parts.count < 2) || !split_scan(sub_complex).value;

    const bool link_nonsplit = !split_scan(complex).value;
    rep.prop_applicable = rep.equality && link_nonsplit;
    rep.predicted.linking_zero = true;
    rep.predicted.sublink_nonsplit = true;
    rep.consistent = !rep.prop_applicable ||
                     (rep.observed.linking_zero && rep.observed.sublink_nonsplit);

    // Component-removal picture: project the link's ranks to the surviving
    // coordinates, shift by the linking numbers, collapse to the grading
    // sum; compare with the sublink's ranks doubled by the tensor factor.
    std::map<long long, FigureRow> rows;
    for (const auto& [h, r] : hat.entries) {
        long long s = 0;
        for (int j = 0; j < l; ++j)
            if (j != i) s += h.alex2[j] - lk.lk[i][j];
        rows[s].dots += r;
    }
    for (const auto& [h, r] : sub_hat.entries) {
        long long s = 0;
        for (int a : h.alex2) s += a;
        rows[s].surviving += 2 * r;
    }
    for (auto& [s, row] : rows) {
        row.grading2 = s;
        rep.figure_accounting.push_back(row);
    }
    return rep;
}

}  // namespace gridfloer
