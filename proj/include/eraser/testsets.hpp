#pragma once

#include <string>
#include <vector>

#include "eraser/graph.hpp"
#include "eraser/metrics.hpp"

namespace eraser {

// A document whose local sets hold a public and a private triple with the
// same tail entity but a different (head, relation); erasing the private
// relation without harming the public one is the hard case.
struct SpecialMembership {
    std::string doc_id;
    Triple public_triple;
    Triple private_triple;
};

// A collection where some document's private pair (h, t) is disconnected in
// the rest of the private graph yet still connected through the other
// documents' non-private triples, so removal from one document does not stop
// cross-document inference.
struct InferMembership {
    std::string collection_id;
    std::string witness_doc_id;
    Triple private_triple;
};

struct SpecialInputDoc {
    std::string doc_id;
    LocalSets locals;
};

struct InferInputDoc {
    std::string doc_id;
    TripleSet g_all;
    TripleSet g_pri;
};

struct InferInput {
    std::string collection_id;
    KnowledgeGraph global;          // G for the collection
    KnowledgeGraph private_graph;   // the partition's private side
    std::vector<InferInputDoc> docs;
};

// Every document admitting a witness is returned, with one deterministic
// witness each (the lexicographically smallest qualifying pair). Output is
// sorted by doc_id and therefore invariant under input reordering.
std::vector<SpecialMembership> build_special(const std::vector<SpecialInputDoc>& docs);

// Membership per the two connectivity clauses over G_pri \ g_i,pri and
// G_unpri \ g_i,unpri (G_unpri = G minus the private side). One membership
// per qualifying collection with the smallest (doc_id, triple) witness.
std::vector<InferMembership> build_infer(const std::vector<InferInput>& collections);

// JSON-lines manifests, one membership per line with the witness inline.
std::string special_to_jsonl(const std::vector<SpecialMembership>& members);
std::string infer_to_jsonl(const std::vector<InferMembership>& members);

}  // namespace eraser
