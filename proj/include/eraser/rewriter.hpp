#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eraser/corpus.hpp"
#include "eraser/triple.hpp"

namespace eraser {

enum class RewriteScope { global, per_document };

std::string to_string(RewriteScope s);
RewriteScope scope_from_string(const std::string& s);

// scope=global carries the whole collection's private/public sets; per_document
// carries only the document's local sets.
struct RewriteRequest {
    DocumentRecord doc;
    TripleSet private_triples;
    TripleSet public_triples;
    RewriteScope scope = RewriteScope::global;
};

struct RewriteResult {
    std::string doc_id;
    std::string rewritten_text;  // may be empty (total redaction), never absent
    double latency_secs = 0.0;
    std::string rewriter_id;
};

// Rewriting interface. Implementations must either be safe for concurrent
// rewrite() calls or report single_flight() = true, in which case the
// harness serializes calls.
class Rewriter {
public:
    virtual ~Rewriter() = default;
    virtual RewriteResult rewrite(const RewriteRequest& req) = 0;
    virtual std::string id() const = 0;
    virtual bool single_flight() const { return false; }
};

// Returns the document unchanged. Upper-bound baseline: retains everything.
std::unique_ptr<Rewriter> make_identity_rewriter();

// Returns the empty document. Lower-bound baseline: erases everything.
std::unique_ptr<Rewriter> make_redaction_rewriter();

// Per-sentence triple alignment, indexed like doc.sentences. A sentence with
// no triples is represented by an empty set.
using SentenceAlignment = std::vector<TripleSet>;

// Drops exactly the sentences whose aligned triples intersect
// req.private_triples, preserving sentence order. Throws AlignmentGapError
// when the alignment does not cover every sentence.
RewriteResult sentence_drop_rewrite(const RewriteRequest& req, const SentenceAlignment& alignment);

// Deterministic rewrite-instruction prompt: requires removing all private
// information, retaining all public information, and keeping the original
// language style; lists both triple sets and the document.
std::string render_prompt(const RewriteRequest& req);
inline constexpr const char* kRewritePromptVersion = "rewrite-prompt/v1";

// Prompt for the downstream answer generator: the question plus the
// rewritten documents.
std::string render_qa_prompt(const std::string& question, const std::vector<std::string>& docs);
inline constexpr const char* kQaPromptVersion = "qa-prompt/v1";

// Normalized exact-match containment: true when any normalized gold answer
// occurs as a substring of the normalized prediction.
bool answer_matches(const std::string& prediction, const std::vector<std::string>& gold_answers);

}  // namespace eraser
