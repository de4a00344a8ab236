#include <doctest.h>

#include "gridfloer/corpus.hpp"

using namespace gridfloer;

TEST_CASE("every bundled diagram parses and validates") {
    for (const CorpusEntry& e : corpus_entries()) {
        GridDiagram g = parse_grid(e.text);
        CHECK(g.name == e.name);
        CHECK_NOTHROW(g.validate());
    }
}

TEST_CASE("corpus lookup by name") {
    CHECK(corpus_grid("hopf").n == 4);
    CHECK_THROWS_AS(corpus_grid("nonesuch"), ParseError);
}

TEST_CASE("full corpus invariant suite passes") {
    for (const CheckResult& r : run_corpus_suite()) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
