#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eraser {

// Synthetic corpus shape. Documents are one-triple-per-sentence so the
// pattern extractor inverts generation exactly. Every document receives at
// least one private and one public filler triple, which is what makes the
// identity/redaction/sentence-drop fixed points exact.
struct SynthSpec {
    std::size_t queries = 2;                  // retrieval groups (one query each)
    std::size_t docs_per_query = 10;          // k documents per group
    std::size_t private_fillers_per_doc = 1;  // isolated private facts
    std::size_t public_fillers_per_doc = 2;   // isolated public facts
    // Cross-document inference chains per group: a private edge (A,B) plus a
    // second private edge (B,M) in another document shield the alternate
    // path (A,M),(M,B), which therefore drops out of the public side but
    // remains in the collection's non-private graph. Requires k >= 4.
    std::size_t planted_chains = 1;
    // Documents per group given a public/private triple pair sharing a tail.
    std::size_t special_docs = 1;
    // Leading groups whose query references a private filler's entities;
    // their QA pairs are ineligible under the privacy filter.
    std::size_t private_query_groups = 0;
    std::uint64_t seed = 0;
};

// Ground truth the generator declares alongside the corpus.
struct SynthExpectations {
    double identity_r_pri = 1.0, identity_r_pub = 1.0, identity_r_connect = 1.0;
    double redact_r_pri = 0.0, redact_r_pub = 0.0, redact_r_connect = 0.0;
    double sentence_drop_r_pri = 0.0, sentence_drop_r_pub = 1.0;
    double sentence_drop_r_connect = 0.0;  // fraction still inferable after the oracle eraser
    std::vector<std::string> infer_members;   // query ids
    std::vector<std::string> special_docs;    // doc ids
};

// Writes queries.jsonl, docs.jsonl, triples.jsonl, alignment.jsonl, pinned
// partitions under partitions/, and expected.json into corpus_dir.
// Deterministic given the spec (byte-identical reruns).
SynthExpectations generate_synthetic(const SynthSpec& spec, const std::string& corpus_dir);

SynthExpectations load_expectations(const std::string& corpus_dir);

}  // namespace eraser
