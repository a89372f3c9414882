#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eraser/triple.hpp"

namespace eraser {

// One retrieved document. Sentence spans are [begin, end) character offsets
// into text, ordered and non-overlapping.
struct DocumentRecord {
    std::string doc_id;
    std::string query_id;
    std::string text;
    std::vector<std::pair<std::size_t, std::size_t>> sentences;
    std::string triples_path;  // sidecar the doc's triples were loaded from

    std::string sentence_text(std::size_t index) const {
        const auto& [begin, end] = sentences.at(index);
        return text.substr(begin, end - begin);
    }
};

struct QueryRecord {
    std::string query_id;
    std::string text;
    std::vector<std::string> answers;
    TripleSet query_triples;
};

// Validated in-memory corpus: every document resolves to a query, every
// triple row resolves to a document.
struct Corpus {
    std::vector<QueryRecord> queries;                    // sorted by query_id
    std::map<std::string, std::vector<DocumentRecord>> docs_by_query;
    std::map<std::string, TripleSet> triples_by_doc;     // g_i per document

    std::size_t document_count() const;
    std::size_t triple_count() const;
};

// Loads queries.jsonl, docs.jsonl and triples.jsonl from corpus_dir.
// Throws SchemaViolationError (with file/line) on malformed rows and
// DanglingReferenceError on unresolved ids.
Corpus ingest(const std::string& corpus_dir);

}  // namespace eraser
