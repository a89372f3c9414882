#pragma once

#include <memory>
#include <string>

#include "eraser/triple.hpp"

namespace eraser {

// Relation extraction interface: document text in, normalized triple set
// out. The same interface serves ingestion-side sidecars and re-extraction
// from rewritten documents. doc_id is passed so sidecar-backed extractors
// can key their lookups; text-driven extractors ignore it.
class TripleExtractor {
public:
    virtual ~TripleExtractor() = default;
    virtual TripleSet extract(const std::string& doc_id, const std::string& text) = 0;
    virtual std::string id() const = 0;
};

// Pass-through loader for pre-extracted triples: reads a JSONL sidecar of
// {doc_id, head, relation, tail} rows once and answers lookups by doc_id.
// Unknown doc_ids yield the empty set.
std::unique_ptr<TripleExtractor> make_sidecar_extractor(const std::string& jsonl_path);

// Inverse of the synthetic corpus generator: each sentence is
// "<head> <relation> <tail>." where the relation is the single token
// containing an underscore. Sentences that do not match the pattern yield
// nothing.
std::unique_ptr<TripleExtractor> make_pattern_extractor();

}  // namespace eraser
