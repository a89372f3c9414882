#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "eraser/graph.hpp"

namespace eraser {

// How the candidate private set is drawn from the global graph.
//  - uniform:        unordered sample of triples at the configured ratio
//  - connected_walk: random walk over incident edges until the size target
//                    is met; restarts in a fresh component when exhausted
//  - pinned:         no sampling; the partition is loaded from a file
//                    (synthetic corpora ship ground-truth partitions)
enum class SampleStrategy { uniform, connected_walk, pinned };

std::string to_string(SampleStrategy s);
SampleStrategy strategy_from_string(const std::string& s);

struct PartitionConfig {
    double ratio = 0.25;
    SampleStrategy strategy = SampleStrategy::uniform;
    std::uint64_t seed = 0;
    TripleSet query_triples;  // never eligible for the private side
};

// The filtered private/public split of a global graph, plus the candidates
// each filtering step removed. private/public/dropped sets partition the
// global graph exactly.
struct PrivacyPartition {
    KnowledgeGraph private_graph;
    KnowledgeGraph public_graph;
    TripleSet dropped_public;
    TripleSet dropped_private;
    PartitionConfig config;
    std::size_t walk_restarts = 0;  // connected_walk only
};

// Draws the candidate private set: round(ratio * |G|) triples, excluding
// cfg.query_triples. Deterministic given cfg.seed. Throws
// DegenerateRatioError when the target is zero or nothing is eligible.
TripleSet sample_private_candidates(const KnowledgeGraph& global, const PartitionConfig& cfg);

// Keeps the public candidates whose endpoints are NOT connected in the graph
// formed by the private candidates. Returns (kept, dropped).
std::pair<TripleSet, TripleSet> filter_public(const TripleSet& public_candidates,
                                              const TripleSet& private_candidates);

// Keeps the private candidates whose endpoints are NOT connected in the graph
// formed by the kept public triples. Returns (kept, dropped). Must run after
// filter_public: checking public candidates against the unfiltered private
// set keeps both separation conditions valid on the final sets.
std::pair<TripleSet, TripleSet> filter_private(const TripleSet& private_candidates,
                                               const TripleSet& public_kept);

// sample -> filter_public -> filter_private. The result satisfies both
// separation conditions (verified before returning).
PrivacyPartition make_partition(const KnowledgeGraph& global, const PartitionConfig& cfg);

// Checks both separation conditions and the exact-cover invariant against
// the global graph the partition was built from. Throws Error on violation.
void verify_partition(const PrivacyPartition& p, const KnowledgeGraph& global);

// JSON persistence (see README for the schema).
std::string partition_to_json(const PrivacyPartition& p);
PrivacyPartition partition_from_json(const std::string& text);
void save_partition(const PrivacyPartition& p, const std::string& path);
PrivacyPartition load_partition(const std::string& path);

}  // namespace eraser
