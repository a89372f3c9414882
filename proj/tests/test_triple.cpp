#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"
#include "eraser/triple.hpp"

using namespace eraser;

TEST_CASE("normalize_entity trims, collapses whitespace and lowercases") {
    CHECK(normalize_entity("  John   Doe ") == "john doe");
    CHECK(normalize_entity("TechVille") == "techville");
    CHECK(normalize_entity("a\tb\nc") == "a b c");
    CHECK(normalize_entity("already normal") == "already normal");
}

TEST_CASE("normalize_entity rejects empty input") {
    CHECK_THROWS_AS(normalize_entity(""), InvalidEntityError);
    CHECK_THROWS_AS(normalize_entity("   \t\n"), InvalidEntityError);
}

TEST_CASE("normalize_entity is idempotent") {
    for (const char* raw : {"  John   Doe ", "TechVille", "x", "a   B  c"}) {
        std::string once = normalize_entity(raw);
        CHECK(normalize_entity(once) == once);
    }
}

TEST_CASE("triples normalize their fields on construction") {
    Triple t(" John  Doe", "Lives_In ", " TechVille");
    CHECK(t.head() == "john doe");
    CHECK(t.relation() == "lives_in");
    CHECK(t.tail() == "techville");
}

TEST_CASE("triple equality is field-wise on normalized values") {
    Triple a("John Doe", "lives_in", "TechVille");
    Triple b(" john   doe ", "LIVES_IN", "techville");
    Triple c("john doe", "lives_in", "othertown");
    CHECK(a == b);
    CHECK(a != c);
    CHECK((a < c || c < a));
}

TEST_CASE("triple rejects a field that normalizes to nothing") {
    CHECK_THROWS_AS(Triple("a", "  ", "b"), InvalidEntityError);
    CHECK_THROWS_AS(Triple("", "r", "b"), InvalidEntityError);
    CHECK_THROWS_AS(Triple("a", "r", ""), InvalidEntityError);
}

TEST_CASE("triple-set files round-trip and normalize raw rows") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "eraser_tripleset_test.jsonl";
    {
        std::ofstream out(path);
        out << R"({"head":" John  Doe","relation":"LIVES_IN","tail":"TechVille"})" << "\n";
        out << R"({"head":"a","relation":"r","tail":"b"})" << "\n";
    }
    TripleSet loaded = load_triple_set_jsonl(path.string());
    CHECK(loaded == TripleSet{Triple("john doe", "lives_in", "techville"), Triple("a", "r", "b")});

    save_triple_set_jsonl(loaded, path.string());
    CHECK(load_triple_set_jsonl(path.string()) == loaded);
    fs::remove(path);

    std::ofstream bad(path);
    bad << R"({"head":"a"})" << "\n";
    bad.close();
    CHECK_THROWS_AS(load_triple_set_jsonl(path.string()), SchemaViolationError);
    fs::remove(path);
}
