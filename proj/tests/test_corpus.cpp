#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "eraser/corpus.hpp"
#include "eraser/error.hpp"

using namespace eraser;
namespace fs = std::filesystem;

namespace {

class TempCorpus {
public:
    TempCorpus() {
        dir_ = fs::temp_directory_path() /
               ("eraser_corpus_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(dir_);
    }
    ~TempCorpus() { fs::remove_all(dir_); }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir_ / name);
        out << content;
    }

    std::string path() const { return dir_.string(); }

private:
    fs::path dir_;
};

void write_wellformed(TempCorpus& c) {
    c.write("queries.jsonl",
            R"({"query_id":"q0","text":"who?","answers":["b"],"query_triples":[{"head":"a","relation":"r","tail":"b"}]})"
            "\n"
            R"({"query_id":"q1","text":"where?","answers":["d"],"query_triples":[]})"
            "\n");
    c.write("docs.jsonl",
            R"({"doc_id":"d0","query_id":"q0","text":"a r_x b.","sentences":[[0,8]]})"
            "\n"
            R"({"doc_id":"d1","query_id":"q0","text":"c r_y d. e r_z f.","sentences":[[0,8],[9,17]]})"
            "\n"
            R"({"doc_id":"d2","query_id":"q1","text":"g r_w h.","sentences":[[0,8]]})"
            "\n");
    c.write("triples.jsonl",
            R"({"doc_id":"d0","head":"a","relation":"r_x","tail":"b"})"
            "\n"
            R"({"doc_id":"d1","head":"c","relation":"r_y","tail":"d"})"
            "\n"
            R"({"doc_id":"d1","head":"e","relation":"r_z","tail":"f"})"
            "\n"
            R"({"doc_id":"d2","head":"g","relation":"r_w","tail":"h"})"
            "\n");
}

}  // namespace

TEST_CASE("a well-formed corpus ingests with the declared counts") {
    TempCorpus c;
    write_wellformed(c);
    Corpus corpus = ingest(c.path());
    CHECK(corpus.queries.size() == 2);
    CHECK(corpus.document_count() == 3);
    CHECK(corpus.triple_count() == 4);
    CHECK(corpus.docs_by_query.at("q0").size() == 2);
    CHECK(corpus.triples_by_doc.at("d1").size() == 2);
    CHECK(corpus.queries[0].query_triples.size() == 1);

    const DocumentRecord& d1 = corpus.docs_by_query.at("q0")[1];
    CHECK(d1.doc_id == "d1");
    CHECK(d1.sentence_text(0) == "c r_y d.");
    CHECK(d1.sentence_text(1) == "e r_z f.");
}

TEST_CASE("an empty corpus directory is a schema violation") {
    TempCorpus c;
    CHECK_THROWS_AS(ingest(c.path()), SchemaViolationError);
}

TEST_CASE("malformed JSON rows carry file and line") {
    TempCorpus c;
    write_wellformed(c);
    c.write("triples.jsonl", "{not json\n");
    try {
        ingest(c.path());
        FAIL("expected a schema violation");
    } catch (const SchemaViolationError& e) {
        std::string what = e.what();
        CHECK(what.find("triples.jsonl:1") != std::string::npos);
    }
}

TEST_CASE("missing fields are schema violations") {
    TempCorpus c;
    write_wellformed(c);
    c.write("queries.jsonl", R"({"query_id":"q0","text":"who?"})" "\n");
    CHECK_THROWS_AS(ingest(c.path()), SchemaViolationError);
}

TEST_CASE("a triple referencing an unknown document dangles") {
    TempCorpus c;
    write_wellformed(c);
    c.write("triples.jsonl",
            R"({"doc_id":"ghost","head":"a","relation":"r","tail":"b"})" "\n");
    CHECK_THROWS_AS(ingest(c.path()), DanglingReferenceError);
}

TEST_CASE("a document referencing an unknown query dangles") {
    TempCorpus c;
    write_wellformed(c);
    c.write("docs.jsonl",
            R"({"doc_id":"d0","query_id":"ghost","text":"a r_x b.","sentences":[[0,8]]})" "\n");
    CHECK_THROWS_AS(ingest(c.path()), DanglingReferenceError);
}

TEST_CASE("bad sentence spans are schema violations") {
    TempCorpus c;
    write_wellformed(c);

    SUBCASE("out of bounds") {
        c.write("docs.jsonl",
                R"({"doc_id":"d0","query_id":"q0","text":"short.","sentences":[[0,99]]})" "\n");
        CHECK_THROWS_AS(ingest(c.path()), SchemaViolationError);
    }
    SUBCASE("overlapping") {
        c.write("docs.jsonl",
                R"({"doc_id":"d0","query_id":"q0","text":"a r b. c r d.","sentences":[[0,8],[4,13]]})"
                "\n");
        CHECK_THROWS_AS(ingest(c.path()), SchemaViolationError);
    }
    SUBCASE("reversed") {
        c.write("docs.jsonl",
                R"({"doc_id":"d0","query_id":"q0","text":"a r b.","sentences":[[5,2]]})" "\n");
        CHECK_THROWS_AS(ingest(c.path()), SchemaViolationError);
    }
}

TEST_CASE("duplicate ids are rejected") {
    TempCorpus c;
    write_wellformed(c);
    c.write("queries.jsonl",
            R"({"query_id":"q0","text":"a?","answers":[],"query_triples":[]})"
            "\n"
            R"({"query_id":"q0","text":"b?","answers":[],"query_triples":[]})"
            "\n");
    CHECK_THROWS_AS(ingest(c.path()), SchemaViolationError);
}
