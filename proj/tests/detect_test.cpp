#include <doctest.h>

#include <cstdlib>

#include "gridfloer/corpus.hpp"
#include "gridfloer/detect.hpp"

using namespace gridfloer;

namespace {

MultigradedRanks hat_of(const std::string& name) {
    return hat_ranks(tilde_homology(corpus_grid(name)));
}

}  // namespace

TEST_CASE("unknot alexander polynomial is 1") {
    EulerAlexander ea = euler_and_alexander(hat_of("unknot2"));
    CHECK(ea.alexander == LaurentPoly{{{0}, 1}});
}

TEST_CASE("hopf chi factors and alexander is 1") {
    EulerAlexander ea = euler_and_alexander(hat_of("hopf"));
    // chi = +-(tau1 - tau1^-1)(tau2 - tau2^-1); the overall sign depends on
    // the chirality the grid presents
    LaurentPoly expected_chi{
        {{1, 1}, 1}, {{1, -1}, -1}, {{-1, 1}, -1}, {{-1, -1}, 1}};
    LaurentPoly negated;
    for (const auto& [e, c] : expected_chi) negated[e] = -c;
    CHECK((ea.chi == expected_chi || ea.chi == negated));
    CHECK(ea.alexander == LaurentPoly{{{0, 0}, 1}});
}

TEST_CASE("trefoil alexander matches the Seifert matrix determinant oracle") {
    // Seifert matrix V = [[-1, 1], [0, -1]] for the trefoil;
    // det(V - t V^T) = t^2 - t + 1, symmetrized: t - 1 + 1/t, tau^2 = t.
    const long long v[2][2] = {{-1, 1}, {0, -1}};
    // det as a polynomial in t: (v00 - t*v00)(v11 - t*v11) - (v01 - t*v10)(v10 - t*v01)
    long long c0 = v[0][0] * v[1][1] - v[0][1] * v[1][0];                      // t^0
    long long c1 = -2 * v[0][0] * v[1][1] + v[0][1] * v[0][1] + v[1][0] * v[1][0];  // t^1
    long long c2 = v[0][0] * v[1][1] - v[0][1] * v[1][0];                      // t^2
    CHECK(c0 == 1);
    CHECK(c1 == -1);
    CHECK(c2 == 1);

    EulerAlexander ea = euler_and_alexander(hat_of("trefoil"));
    LaurentPoly expected{{{-2}, c0}, {{0}, c1}, {{2}, c2}};
    CHECK(ea.alexander == expected);
}

TEST_CASE("unlink alexander vanishes") {
    EulerAlexander ea = euler_and_alexander(hat_of("unlink2"));
    CHECK(ea.chi.empty());
    CHECK(ea.alexander.empty());
}

TEST_CASE("division error on a non-divisible table") {
    MultigradedRanks fake;
    fake.n = 4;
    fake.components = 2;
    fake.marks_per_component = {2, 2};
    fake.entries[MultiGrading{0, {1, 1}}] = 1;  // chi = tau1 tau2 alone
    CHECK_THROWS_AS(euler_and_alexander(fake), NotDivisible);
}

TEST_CASE("detect_all on the hopf grid") {
    DetectionReport rep = detect_all(corpus_grid("hopf"));
    CHECK(rep.components == 2);
    CHECK(rep.lfr == 4);
    CHECK_FALSE(rep.is_unknot.value);
    CHECK_FALSE(rep.is_unlink.value);
    CHECK(rep.is_hopf_link.value);
    CHECK(rep.is_second_smallest_class.value);
    CHECK_FALSE(rep.is_split.value);
    CHECK(rep.fibered_top_certificate.value);
}

TEST_CASE("detect_all on the unknot") {
    DetectionReport rep = detect_all(corpus_grid("unknot2"));
    CHECK(rep.is_unknot.value);
    CHECK(rep.is_unlink.value);  // the 1-component unlink
    CHECK_FALSE(rep.is_hopf_link.value);
    CHECK_FALSE(rep.is_split.value);
    CHECK(rep.fibered_top_certificate.value);
}

TEST_CASE("detect_all on hopf disjoint unknot") {
    DetectionReport rep = detect_all(corpus_grid("hopf-disjoint-unknot"));
    CHECK(rep.components == 3);
    CHECK(rep.lfr == 8);
    CHECK(rep.is_second_smallest_class.value);
    CHECK(rep.is_split.value);
    CHECK_FALSE(rep.is_unlink.value);
}

TEST_CASE("removal audit on the hopf link") {
    AuditReport rep = removal_audit(corpus_grid("hopf"), 0);
    CHECK(rep.lfr_link == 4);
    CHECK(rep.lfr_sublink == 1);
    CHECK_FALSE(rep.equality);
    CHECK(rep.shift_vector.size() == 2);
    CHECK(rep.shift_vector[0] == 0);
    CHECK(std::abs(rep.shift_vector[1]) == 1);
    CHECK_FALSE(rep.observed.linking_zero);
    CHECK(rep.consistent);  // prediction not applicable, nothing violated
}

TEST_CASE("removal audit on hopf disjoint unknot, removing the unknot") {
    AuditReport rep = removal_audit(corpus_grid("hopf-disjoint-unknot"), 2);
    CHECK(rep.lfr_link == 8);
    CHECK(rep.lfr_sublink == 4);
    CHECK(rep.equality);
    CHECK(rep.observed.linking_zero);
    CHECK_FALSE(rep.prop_applicable);  // the link itself is split
    CHECK(rep.consistent);
}

TEST_CASE("removal audit errors") {
    CHECK_THROWS_AS(removal_audit(corpus_grid("hopf"), 5), InvalidComponent);
    CHECK_THROWS_AS(removal_audit(corpus_grid("unknot2"), 0), LastComponent);
}

TEST_CASE("figure accounting totals match the ranks") {
    AuditReport rep = removal_audit(corpus_grid("hopf"), 0);
    long long dots = 0, surviving = 0;
    for (const FigureRow& row : rep.figure_accounting) {
        dots += row.dots;
        surviving += row.surviving;
        CHECK((row.dots - row.surviving) % 2 == 0);
        CHECK(row.dots >= row.surviving);
    }
    CHECK(dots == rep.lfr_link);
    CHECK(surviving == 2 * rep.lfr_sublink);
}
