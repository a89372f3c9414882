#include "eraser/partition.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"
#include "eraser/rng.hpp"

namespace eraser {

std::string to_string(SampleStrategy s) {
    switch (s) {
        case SampleStrategy::uniform: return "uniform";
        case SampleStrategy::connected_walk: return "connected-walk";
        case SampleStrategy::pinned: return "pinned";
    }
    throw Error("unknown strategy");
}

SampleStrategy strategy_from_string(const std::string& s) {
    if (s == "uniform") return SampleStrategy::uniform;
    if (s == "connected-walk") return SampleStrategy::connected_walk;
    if (s == "pinned") return SampleStrategy::pinned;
    throw Error("unknown sampling strategy: " + s);
}

namespace {

std::vector<Triple> eligible_triples(const KnowledgeGraph& global, const PartitionConfig& cfg) {
    std::vector<Triple> out;
    out.reserve(global.size());
    for (const Triple& t : global.triples()) {
        if (cfg.query_triples.count(t) == 0) out.push_back(t);
    }
    return out;
}

std::size_t sample_target(const KnowledgeGraph& global, const PartitionConfig& cfg) {
    if (!(cfg.ratio > 0.0 && cfg.ratio < 1.0)) {
        throw Error("partition ratio must lie in (0,1)");
    }
    auto target = static_cast<std::size_t>(std::llround(cfg.ratio * static_cast<double>(global.size())));
    if (target == 0) {
        throw DegenerateRatioError("private sampling target rounds to zero");
    }
    return target;
}

TripleSet sample_uniform(std::vector<Triple> eligible, std::size_t target, std::mt19937_64& rng) {
    std::shuffle(eligible.begin(), eligible.end(), rng);
    auto keep = static_cast<std::ptrdiff_t>(std::min(target, eligible.size()));
    return TripleSet(eligible.begin(), eligible.begin() + keep);
}

TripleSet sample_connected_walk(const std::vector<Triple>& eligible, std::size_t target,
                                std::mt19937_64& rng, std::size_t* restarts) {
    TripleSet chosen;
    std::unordered_set<std::string> visited;
    bool walk_active = false;

    while (chosen.size() < std::min(target, eligible.size())) {
        if (!walk_active) {
            std::vector<const Triple*> remaining;
            for (const Triple& t : eligible) {
                if (chosen.count(t) == 0) remaining.push_back(&t);
            }
            std::uniform_int_distribution<std::size_t> pick(0, remaining.size() - 1);
            const Triple& start = *remaining[pick(rng)];
            chosen.insert(start);
            visited = {start.head(), start.tail()};
            walk_active = true;
            continue;
        }

        // frontier: unchosen eligible edges incident to the visited entity set
        std::vector<const Triple*> frontier;
        for (const Triple& t : eligible) {
            if (chosen.count(t) > 0) continue;
            if (visited.count(t.head()) > 0 || visited.count(t.tail()) > 0) {
                frontier.push_back(&t);
            }
        }
        if (frontier.empty()) {
            walk_active = false;  // component exhausted, restart elsewhere
            ++*restarts;
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        const Triple& next = *frontier[pick(rng)];
        chosen.insert(next);
        visited.insert(next.head());
        visited.insert(next.tail());
    }
    return chosen;
}

}  // namespace

TripleSet sample_private_candidates(const KnowledgeGraph& global, const PartitionConfig& cfg) {
    std::size_t target = sample_target(global, cfg);
    std::vector<Triple> eligible = eligible_triples(global, cfg);
    if (eligible.empty()) {
        throw DegenerateRatioError("no triple is eligible for the private side");
    }
    auto rng = make_rng(cfg.seed, "partition-sample");
    if (cfg.strategy == SampleStrategy::uniform) {
        return sample_uniform(std::move(eligible), target, rng);
    }
    if (cfg.strategy == SampleStrategy::connected_walk) {
        std::size_t restarts = 0;
        return sample_connected_walk(eligible, target, rng, &restarts);
    }
    throw Error("pinned partitions are loaded, not sampled");
}

std::pair<TripleSet, TripleSet> filter_public(const TripleSet& public_candidates,
                                              const TripleSet& private_candidates) {
    KnowledgeGraph private_graph{private_candidates};
    TripleSet kept, dropped;
    for (const Triple& t : public_candidates) {
        if (private_graph.connected(t.head(), t.tail())) {
            dropped.insert(t);
        } else {
            kept.insert(t);
        }
    }
    return {std::move(kept), std::move(dropped)};
}

std::pair<TripleSet, TripleSet> filter_private(const TripleSet& private_candidates,
                                               const TripleSet& public_kept) {
    KnowledgeGraph public_graph{public_kept};
    TripleSet kept, dropped;
    for (const Triple& t : private_candidates) {
        if (public_graph.connected(t.head(), t.tail())) {
            dropped.insert(t);
        } else {
            kept.insert(t);
        }
    }
    return {std::move(kept), std::move(dropped)};
}

PrivacyPartition make_partition(const KnowledgeGraph& global, const PartitionConfig& cfg) {
    PrivacyPartition out;
    out.config = cfg;

    TripleSet private_candidates;
    if (cfg.strategy == SampleStrategy::connected_walk) {
        // inline the walk so restart provenance is kept
        std::size_t target = sample_target(global, cfg);
        std::vector<Triple> eligible = eligible_triples(global, cfg);
        if (eligible.empty()) {
            throw DegenerateRatioError("no triple is eligible for the private side");
        }
        auto rng = make_rng(cfg.seed, "partition-sample");
        private_candidates = sample_connected_walk(eligible, target, rng, &out.walk_restarts);
    } else {
        private_candidates = sample_private_candidates(global, cfg);
    }

    TripleSet public_candidates;
    for (const Triple& t : global.triples()) {
        if (private_candidates.count(t) == 0) public_candidates.insert(t);
    }

    auto [public_kept, public_dropped] = filter_public(public_candidates, private_candidates);
    auto [private_kept, private_dropped] = filter_private(private_candidates, public_kept);

    out.private_graph = KnowledgeGraph(private_kept);
    out.public_graph = KnowledgeGraph(public_kept);
    out.dropped_public = std::move(public_dropped);
    out.dropped_private = std::move(private_dropped);
    verify_partition(out, global);
    return out;
}

void verify_partition(const PrivacyPartition& p, const KnowledgeGraph& global) {
    for (const Triple& t : p.public_graph.triples()) {
        if (p.private_graph.connected(t.head(), t.tail())) {
            throw Error("separation violation: public triple endpoints connected in private graph");
        }
    }
    for (const Triple& t : p.private_graph.triples()) {
        if (p.public_graph.connected(t.head(), t.tail())) {
            throw Error("separation violation: private triple endpoints connected in public graph");
        }
    }

    TripleSet covered;
    for (const Triple& t : p.private_graph.triples()) covered.insert(t);
    for (const Triple& t : p.public_graph.triples()) {
        if (!covered.insert(t).second) throw Error("partition sides overlap");
    }
    for (const Triple& t : p.dropped_public) {
        if (!covered.insert(t).second) throw Error("partition sides overlap");
    }
    for (const Triple& t : p.dropped_private) {
        if (!covered.insert(t).second) throw Error("partition sides overlap");
    }
    if (covered.size() != global.size()) {
        throw Error("partition does not cover the global graph exactly");
    }
    for (const Triple& t : global.triples()) {
        if (covered.count(t) == 0) throw Error("partition covers a triple outside the global graph");
    }
}

std::string partition_to_json(const PrivacyPartition& p) {
    json j;
    j["config"] = {{"ratio", p.config.ratio},
                   {"strategy", to_string(p.config.strategy)},
                   {"seed", p.config.seed},
                   {"query_triples", triples_to_json(p.config.query_triples)}};
    j["private"] = triples_to_json(p.private_graph.triple_set());
    j["public"] = triples_to_json(p.public_graph.triple_set());
    j["dropped_public"] = triples_to_json(p.dropped_public);
    j["dropped_private"] = triples_to_json(p.dropped_private);
    j["walk_restarts"] = p.walk_restarts;
    return j.dump(2) + "\n";
}

PrivacyPartition partition_from_json(const std::string& text) {
    json j = json::parse(text);
    PrivacyPartition p;
    const json& cfg = j.at("config");
    p.config.ratio = cfg.at("ratio").get<double>();
    p.config.strategy = strategy_from_string(cfg.at("strategy").get<std::string>());
    p.config.seed = cfg.at("seed").get<std::uint64_t>();
    p.config.query_triples = triples_from_json(cfg.at("query_triples"));
    p.private_graph = KnowledgeGraph(triples_from_json(j.at("private")));
    p.public_graph = KnowledgeGraph(triples_from_json(j.at("public")));
    p.dropped_public = triples_from_json(j.at("dropped_public"));
    p.dropped_private = triples_from_json(j.at("dropped_private"));
    p.walk_restarts = j.value("walk_restarts", 0u);
    return p;
}

void save_partition(const PrivacyPartition& p, const std::string& path) {
    write_file(path, partition_to_json(p));
}

PrivacyPartition load_partition(const std::string& path) {
    try {
        return partition_from_json(read_file(path));
    } catch (const json::exception& e) {
        throw SchemaViolationError(path + ": " + e.what());
    }
}

}  // namespace eraser
