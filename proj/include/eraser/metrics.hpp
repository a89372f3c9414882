#pragma once

#include <cstddef>

#include "eraser/graph.hpp"
#include "eraser/partition.hpp"

namespace eraser {

// A document's triples split against a partition:
//   g_pri = g_all ∩ private, g_pub = g_all ∩ public.
// Triples the partition dropped belong to neither side.
struct LocalSets {
    TripleSet g_pri;
    TripleSet g_pub;
    TripleSet g_all;
};

struct RetentionCounts {
    std::size_t kept_private = 0;
    std::size_t total_private = 0;
    std::size_t kept_public = 0;
    std::size_t total_public = 0;
};

// Fractions of a document's private/public triples still extractable after
// rewriting. Zero-denominator conventions: no private triples -> r_pri = 0
// (nothing to leak); no public triples -> r_pub = 1 (nothing to lose).
struct RetentionScores {
    double r_pri = 0.0;
    double r_pub = 1.0;
    RetentionCounts counts;
};

LocalSets local_sets(const TripleSet& doc_triples, const PrivacyPartition& partition);

RetentionScores retention_rates(const TripleSet& rewritten_triples, const LocalSets& local);

// Supervised-data acceptance: full privacy removal and strictly more than
// 80% of the public triples retained.
bool sft_accept(const RetentionScores& scores);

// Fraction of private triples whose endpoints are still connected in the
// graph rebuilt from the rewritten documents. Throws UndefinedRatioError on
// an empty private graph.
double privacy_connection_ratio(const KnowledgeGraph& private_graph,
                                const KnowledgeGraph& rewritten_graph);

}  // namespace eraser
