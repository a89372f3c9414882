#include "eraser/rewriter.hpp"

#include <sstream>

#include "eraser/error.hpp"

namespace eraser {

std::string to_string(RewriteScope s) {
    return s == RewriteScope::global ? "global" : "per-document";
}

RewriteScope scope_from_string(const std::string& s) {
    if (s == "global") return RewriteScope::global;
    if (s == "per-document") return RewriteScope::per_document;
    throw Error("unknown rewrite scope: " + s);
}

namespace {

class IdentityRewriter final : public Rewriter {
public:
    RewriteResult rewrite(const RewriteRequest& req) override {
        return {req.doc.doc_id, req.doc.text, 0.0, id()};
    }
    std::string id() const override { return "identity"; }
};

class RedactionRewriter final : public Rewriter {
public:
    RewriteResult rewrite(const RewriteRequest& req) override {
        return {req.doc.doc_id, "", 0.0, id()};
    }
    std::string id() const override { return "redact"; }
};

void render_triple_list(std::ostream& out, const TripleSet& triples) {
    if (triples.empty()) {
        out << "(none)\n";
        return;
    }
    for (const Triple& t : triples) {
        out << "- [" << t.head() << " | " << t.relation() << " | " << t.tail() << "]\n";
    }
}

}  // namespace

std::unique_ptr<Rewriter> make_identity_rewriter() {
    return std::make_unique<IdentityRewriter>();
}

std::unique_ptr<Rewriter> make_redaction_rewriter() {
    return std::make_unique<RedactionRewriter>();
}

RewriteResult sentence_drop_rewrite(const RewriteRequest& req, const SentenceAlignment& alignment) {
    if (alignment.size() != req.doc.sentences.size()) {
        throw AlignmentGapError("alignment covers " + std::to_string(alignment.size()) +
                                " sentences, document has " +
                                std::to_string(req.doc.sentences.size()));
    }
    std::string out;
    for (std::size_t i = 0; i < req.doc.sentences.size(); ++i) {
        bool is_private = false;
        for (const Triple& t : alignment[i]) {
            if (req.private_triples.count(t) > 0) {
                is_private = true;
                break;
            }
        }
        if (is_private) continue;
        if (!out.empty()) out.push_back(' ');
        out += req.doc.sentence_text(i);
    }
    return {req.doc.doc_id, std::move(out), 0.0, "sentence-drop"};
}

std::string render_prompt(const RewriteRequest& req) {
    std::ostringstream out;
    out << "Rewrite the document below. The rewritten document must remove all private\n"
           "information, retain all public information, and maintain the original\n"
           "language style. Private and public information are given as\n"
           "[head | relation | tail] facts.\n"
           "\n"
           "Private information (remove all of it):\n";
    render_triple_list(out, req.private_triples);
    out << "\n"
           "Public information (retain all of it):\n";
    render_triple_list(out, req.public_triples);
    out << "\n"
           "Document:\n"
        << req.doc.text
        << "\n"
           "\n"
           "Rewritten document:\n";
    return out.str();
}

std::string render_qa_prompt(const std::string& question, const std::vector<std::string>& docs) {
    std::ostringstream out;
    out << "Answer the question using only the documents below. Respond with the answer\n"
           "text alone.\n\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
        out << "Document " << (i + 1) << ":\n" << docs[i] << "\n\n";
    }
    out << "Question: " << question << "\nAnswer:\n";
    return out.str();
}

bool answer_matches(const std::string& prediction, const std::vector<std::string>& gold_answers) {
    std::string norm_pred;
    try {
        norm_pred = normalize_entity(prediction);
    } catch (const InvalidEntityError&) {
        return false;  // blank prediction matches nothing
    }
    for (const std::string& gold : gold_answers) {
        try {
            if (norm_pred.find(normalize_entity(gold)) != std::string::npos) return true;
        } catch (const InvalidEntityError&) {
            continue;
        }
    }
    return false;
}

}  // namespace eraser
