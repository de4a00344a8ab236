#pragma once

#include <map>
#include <string>
#include <vector>

#include "gridfloer/action.hpp"
#include "gridfloer/complex.hpp"
#include "gridfloer/grid.hpp"

namespace gridfloer {

/// Laurent polynomial in tau_1..tau_l where tau_i tracks alex2[i], so
/// tau_i^2 = t_i. Keys are exponent vectors; zero coefficients are absent.
using LaurentPoly = std::map<std::vector<int>, long long>;

struct EulerAlexander {
    LaurentPoly chi;        ///< graded Euler characteristic of the hat ranks
    LaurentPoly alexander;  ///< multivariable Alexander polynomial, normalized
};

/// chi = sum (-1)^maslov rank tau^alex2; for more than one component the
/// Alexander polynomial is chi divided exactly by prod_i (tau_i - tau_i^-1).
/// Normalization: exponent support centered at the origin, leading
/// coefficient positive (the polynomial is defined up to units).
EulerAlexander euler_and_alexander(const MultigradedRanks& hat);

struct Verdict {
    bool value = false;
    std::string why;
};

struct DetectionReport {
    int components = 0;
    long long lfr = 0;
    Verdict is_unknot;
    Verdict is_unlink;
    Verdict is_hopf_link;
    Verdict is_second_smallest_class;
    Verdict is_split;
    Verdict fibered_top_certificate;
    LaurentPoly alexander;
};

DetectionReport detect_all(const GridDiagram& g, const ComplexOptions& opts = {});

/// One collapsed grading value of the component-removal picture: dots from
/// the full link land over the shifted projected grading; surviving is the
/// sublink rank (doubled by the extra tensor factor) left after cancellation.
/// Gradings are sums of shifted doubled Alexander coordinates.
struct FigureRow {
    long long grading2 = 0;
    long long dots = 0;
    long long surviving = 0;
};

struct PropUnlinked {
    bool linking_zero = false;
    bool sublink_nonsplit = false;
};

struct AuditReport {
    int component = 0;
    long long lfr_link = 0;
    long long lfr_sublink = 0;
    bool equality = false;          ///< lfr_link == 2 * lfr_sublink
    std::vector<int> shift_vector;  ///< -lk(L_i, L_j) in doubled units, 0 at i
    bool prop_applicable = false;   ///< equality holds and the link is nonsplit
    PropUnlinked predicted;
    PropUnlinked observed;
    bool consistent = false;  ///< predicted matches observed when applicable
    std::vector<FigureRow> figure_accounting;
};

AuditReport removal_audit(const GridDiagram& g, int i, const ComplexOptions& opts = {});

}  // namespace gridfloer
