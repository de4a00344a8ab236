#pragma once

#include <string>
#include <vector>

#include "gridfloer/grid.hpp"

namespace gridfloer {

/// A bundled example diagram with its expected coarse invariants.
struct CorpusEntry {
    std::string name;
    std::string text;
    bool is_unlink = false;  ///< expected lfr = 2^(l-1) exactly
    bool is_split = false;   ///< expected split verdict
};

const std::vector<CorpusEntry>& corpus_entries();
GridDiagram corpus_grid(const std::string& name);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Cross-module invariant suite over every bundled diagram (and diagram
/// pairs up to the state cap). Used by the `corpus` CLI command.
std::vector<CheckResult> run_corpus_suite();

}  // namespace gridfloer
