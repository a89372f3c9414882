#include <doctest.h>

#include "eraser/error.hpp"
#include "eraser/rewriter.hpp"

using namespace eraser;

namespace {

DocumentRecord five_sentence_doc() {
    DocumentRecord doc;
    doc.doc_id = "d0";
    doc.query_id = "q0";
    doc.text = "s0 r_a t0. s1 r_b t1. s2 r_c t2. s3 r_d t3. s4 r_e t4.";
    std::size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
        doc.sentences.emplace_back(pos, pos + 10);
        pos += 11;
    }
    return doc;
}

SentenceAlignment alignment_of(const DocumentRecord& doc) {
    SentenceAlignment alignment;
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        std::string n = std::to_string(i);
        alignment.push_back({Triple("s" + n, "r_x", "t" + n)});
    }
    return alignment;
}

}  // namespace

TEST_CASE("identity rewriter returns the document unchanged") {
    RewriteRequest req;
    req.doc = five_sentence_doc();
    RewriteResult res = make_identity_rewriter()->rewrite(req);
    CHECK(res.rewritten_text == req.doc.text);
    CHECK(res.doc_id == "d0");
    CHECK(res.rewriter_id == "identity");
}

TEST_CASE("redaction rewriter returns the empty document") {
    RewriteRequest req;
    req.doc = five_sentence_doc();
    RewriteResult res = make_redaction_rewriter()->rewrite(req);
    CHECK(res.rewritten_text.empty());
    CHECK(res.rewriter_id == "redact");
}

TEST_CASE("sentence drop removes exactly the private-aligned sentences") {
    RewriteRequest req;
    req.doc = five_sentence_doc();
    SentenceAlignment alignment = alignment_of(req.doc);

    SUBCASE("no private sentences keeps the text") {
        RewriteResult res = sentence_drop_rewrite(req, alignment);
        CHECK(res.rewritten_text == req.doc.text);
    }

    SUBCASE("all sentences private yields the empty document") {
        for (const TripleSet& ts : alignment) {
            req.private_triples.insert(ts.begin(), ts.end());
        }
        RewriteResult res = sentence_drop_rewrite(req, alignment);
        CHECK(res.rewritten_text.empty());
    }

    SUBCASE("two private sentences leave three, in order") {
        req.private_triples = {Triple("s1", "r_x", "t1"), Triple("s3", "r_x", "t3")};
        RewriteResult res = sentence_drop_rewrite(req, alignment);
        CHECK(res.rewritten_text == "s0 r_a t0. s2 r_c t2. s4 r_e t4.");
    }
}

TEST_CASE("sentence drop rejects an incomplete alignment") {
    RewriteRequest req;
    req.doc = five_sentence_doc();
    SentenceAlignment alignment = alignment_of(req.doc);
    alignment.pop_back();
    CHECK_THROWS_AS(sentence_drop_rewrite(req, alignment), AlignmentGapError);
}

TEST_CASE("rewrite prompt is deterministic and lists the triple sets") {
    RewriteRequest req;
    req.doc = five_sentence_doc();
    req.private_triples = {Triple("a", "r1", "b"), Triple("c", "r2", "d")};
    req.public_triples = {Triple("e", "r3", "f"), Triple("g", "r4", "h"),
                          Triple("i", "r5", "j")};

    std::string prompt = render_prompt(req);
    CHECK(prompt == render_prompt(req));
    CHECK(prompt.find(req.doc.text) != std::string::npos);
    CHECK(prompt.find("remove all private") != std::string::npos);
    CHECK(prompt.find("retain all public") != std::string::npos);
    CHECK(prompt.find("language style") != std::string::npos);

    std::size_t bullets = 0;
    for (std::size_t pos = prompt.find("- ["); pos != std::string::npos;
         pos = prompt.find("- [", pos + 1)) {
        ++bullets;
    }
    CHECK(bullets == 5);  // 2 private + 3 public
}

TEST_CASE("rewrite prompt keeps the constraints with empty triple sets") {
    RewriteRequest req;
    req.doc = five_sentence_doc();
    std::string prompt = render_prompt(req);
    CHECK(prompt.find("remove all private") != std::string::npos);
    CHECK(prompt.find("(none)") != std::string::npos);
}

TEST_CASE("answers score by normalized containment") {
    CHECK(answer_matches("The answer is  TechVille.", {"techville"}));
    CHECK(answer_matches("techville", {"TechVille"}));
    CHECK_FALSE(answer_matches("somewhere else", {"techville"}));
    CHECK(answer_matches("either one", {"missing", "one"}));
    CHECK_FALSE(answer_matches("", {"x"}));
    CHECK_FALSE(answer_matches("x", {}));
}
