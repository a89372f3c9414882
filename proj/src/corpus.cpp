#include "eraser/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"

namespace fs = std::filesystem;

namespace eraser {

std::size_t Corpus::document_count() const {
    std::size_t n = 0;
    for (const auto& [_, docs] : docs_by_query) n += docs.size();
    return n;
}

std::size_t Corpus::triple_count() const {
    std::size_t n = 0;
    for (const auto& [_, triples] : triples_by_doc) n += triples.size();
    return n;
}

namespace {

void require_fields(const json& row, std::initializer_list<const char*> fields) {
    for (const char* f : fields) {
        if (!row.contains(f)) throw Error(std::string("missing field '") + f + "'");
    }
}

void validate_spans(const DocumentRecord& doc) {
    std::size_t prev_end = 0;
    bool first = true;
    for (const auto& [begin, end] : doc.sentences) {
        if (begin >= end) throw Error("sentence span is empty or reversed");
        if (end > doc.text.size()) throw Error("sentence span exceeds document length");
        if (!first && begin < prev_end) throw Error("sentence spans overlap or are unordered");
        prev_end = end;
        first = false;
    }
}

}  // namespace

Corpus ingest(const std::string& corpus_dir) {
    const std::string queries_path = (fs::path(corpus_dir) / "queries.jsonl").string();
    const std::string docs_path = (fs::path(corpus_dir) / "docs.jsonl").string();
    const std::string triples_path = (fs::path(corpus_dir) / "triples.jsonl").string();
    for (const std::string& p : {queries_path, docs_path, triples_path}) {
        if (!fs::exists(p)) throw SchemaViolationError("missing corpus file " + p);
    }

    Corpus corpus;
    std::set<std::string> query_ids;
    for_each_jsonl(queries_path, [&](std::size_t, const json& row) {
        require_fields(row, {"query_id", "text", "answers", "query_triples"});
        QueryRecord q;
        q.query_id = row.at("query_id").get<std::string>();
        q.text = row.at("text").get<std::string>();
        q.answers = row.at("answers").get<std::vector<std::string>>();
        q.query_triples = triples_from_json(row.at("query_triples"));
        if (!query_ids.insert(q.query_id).second) {
            throw Error("duplicate query_id " + q.query_id);
        }
        corpus.queries.push_back(std::move(q));
    });
    std::sort(corpus.queries.begin(), corpus.queries.end(),
              [](const QueryRecord& a, const QueryRecord& b) { return a.query_id < b.query_id; });

    std::set<std::string> doc_ids;
    for_each_jsonl(docs_path, [&](std::size_t line, const json& row) {
        require_fields(row, {"doc_id", "query_id", "text", "sentences"});
        DocumentRecord doc;
        doc.doc_id = row.at("doc_id").get<std::string>();
        doc.query_id = row.at("query_id").get<std::string>();
        doc.text = row.at("text").get<std::string>();
        doc.triples_path = triples_path;
        for (const json& span : row.at("sentences")) {
            if (!span.is_array() || span.size() != 2) {
                throw Error("sentence span must be a [begin, end] pair");
            }
            doc.sentences.emplace_back(span.at(0).get<std::size_t>(),
                                       span.at(1).get<std::size_t>());
        }
        validate_spans(doc);
        if (!doc_ids.insert(doc.doc_id).second) {
            throw Error("duplicate doc_id " + doc.doc_id);
        }
        if (query_ids.count(doc.query_id) == 0) {
            throw DanglingReferenceError(docs_path + ":" + std::to_string(line) +
                                         ": document " + doc.doc_id +
                                         " references unknown query " + doc.query_id);
        }
        corpus.docs_by_query[doc.query_id].push_back(std::move(doc));
    });
    for (auto& [_, docs] : corpus.docs_by_query) {
        std::sort(docs.begin(), docs.end(), [](const DocumentRecord& a, const DocumentRecord& b) {
            return a.doc_id < b.doc_id;
        });
    }

    for_each_jsonl(triples_path, [&](std::size_t line, const json& row) {
        require_fields(row, {"doc_id", "head", "relation", "tail"});
        std::string doc_id = row.at("doc_id").get<std::string>();
        if (doc_ids.count(doc_id) == 0) {
            throw DanglingReferenceError(triples_path + ":" + std::to_string(line) +
                                         ": triple references unknown document " + doc_id);
        }
        corpus.triples_by_doc[doc_id].insert(triple_from_json(row));
    });

    return corpus;
}

}  // namespace eraser
