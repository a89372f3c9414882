#include "eraser/metrics.hpp"

#include "eraser/error.hpp"

namespace eraser {

namespace {

TripleSet intersect(const TripleSet& a, const TripleSet& b) {
    const TripleSet& small = a.size() <= b.size() ? a : b;
    const TripleSet& large = a.size() <= b.size() ? b : a;
    TripleSet out;
    for (const Triple& t : small) {
        if (large.count(t) > 0) out.insert(t);
    }
    return out;
}

}  // namespace

LocalSets local_sets(const TripleSet& doc_triples, const PrivacyPartition& partition) {
    LocalSets out;
    out.g_all = doc_triples;
    for (const Triple& t : doc_triples) {
        if (partition.private_graph.contains(t)) {
            out.g_pri.insert(t);
        } else if (partition.public_graph.contains(t)) {
            out.g_pub.insert(t);
        }
    }
    return out;
}

RetentionScores retention_rates(const TripleSet& rewritten_triples, const LocalSets& local) {
    RetentionScores out;
    out.counts.total_private = local.g_pri.size();
    out.counts.total_public = local.g_pub.size();
    out.counts.kept_private = intersect(rewritten_triples, local.g_pri).size();
    out.counts.kept_public = intersect(rewritten_triples, local.g_pub).size();
    out.r_pri = out.counts.total_private == 0
                    ? 0.0
                    : static_cast<double>(out.counts.kept_private) /
                          static_cast<double>(out.counts.total_private);
    out.r_pub = out.counts.total_public == 0
                    ? 1.0
                    : static_cast<double>(out.counts.kept_public) /
                          static_cast<double>(out.counts.total_public);
    return out;
}

bool sft_accept(const RetentionScores& scores) {
    return scores.r_pri == 0.0 && scores.r_pub > 0.8;
}

double privacy_connection_ratio(const KnowledgeGraph& private_graph,
                                const KnowledgeGraph& rewritten_graph) {
    if (private_graph.empty()) {
        throw UndefinedRatioError("connection ratio is undefined for an empty private graph");
    }
    std::size_t connected_count = 0;
    for (const Triple& t : private_graph.triples()) {
        if (rewritten_graph.connected(t.head(), t.tail())) ++connected_count;
    }
    return static_cast<double>(connected_count) / static_cast<double>(private_graph.size());
}

}  // namespace eraser
