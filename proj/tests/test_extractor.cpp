#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "eraser/extractor.hpp"

using namespace eraser;

TEST_CASE("pattern extractor inverts one-triple sentences") {
    auto ex = make_pattern_extractor();
    CHECK(ex->extract("d", "john doe lives_in techville.") ==
          TripleSet{Triple("john doe", "lives_in", "techville")});
    CHECK(ex->extract("d", "a rel_x b. c rel_y d e.") ==
          TripleSet{Triple("a", "rel_x", "b"), Triple("c", "rel_y", "d e")});
}

TEST_CASE("pattern extractor returns nothing for empty or unmatched text") {
    auto ex = make_pattern_extractor();
    CHECK(ex->extract("d", "").empty());
    CHECK(ex->extract("d", "no relation token here.").empty());
    CHECK(ex->extract("d", "two rel_a rel_b tokens.").empty());
    CHECK(ex->extract("d", "rel_lead token.").empty());   // relation first: no head
    CHECK(ex->extract("d", "token rel_trail.").empty());  // relation last: no tail
    CHECK(ex->extract("d", "unterminated a rel_x b").empty());
}

TEST_CASE("sidecar extractor answers by document id") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "eraser_sidecar_test.jsonl";
    {
        std::ofstream out(path);
        out << R"({"doc_id":"a","head":"a","relation":"r","tail":"b"})" << "\n";
        out << R"({"doc_id":"a","head":"c","relation":"r","tail":"d"})" << "\n";
        out << R"({"doc_id":"b","head":"x","relation":"r","tail":"y"})" << "\n";
    }
    auto ex = make_sidecar_extractor(path.string());
    CHECK(ex->extract("a", "ignored text") ==
          TripleSet{Triple("a", "r", "b"), Triple("c", "r", "d")});
    CHECK(ex->extract("b", "") == TripleSet{Triple("x", "r", "y")});
    CHECK(ex->extract("unknown", "").empty());
    fs::remove(path);
}
