#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eraser/triple.hpp"

namespace eraser {

// A set of triples with an undirected entity-connectivity index. Immutable
// after construction; copyable by value, and any number of threads may query
// a constructed graph concurrently.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;
    explicit KnowledgeGraph(const TripleSet& triples);

    // Triples in canonical (lexicographic) order, deduplicated.
    const std::vector<Triple>& triples() const { return triples_; }
    TripleSet triple_set() const { return TripleSet(triples_.begin(), triples_.end()); }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    bool contains(const Triple& t) const;
    bool has_entity(std::string_view entity) const;

    // All entities occurring as a head or tail, sorted.
    std::vector<std::string> entities() const;

    // True iff an undirected path of triples links a and b. An entity is
    // connected to itself iff it occurs in the graph; any absent endpoint
    // yields false. Breadth-first search over the entity index.
    bool connected(std::string_view a, std::string_view b) const;

private:
    std::vector<Triple> triples_;
    // entity -> indices of incident triples (head or tail matches)
    std::unordered_map<std::string, std::vector<std::uint32_t>> entity_index_;
};

// Union of the given sets; duplicates collapse.
KnowledgeGraph merge_graphs(const std::vector<TripleSet>& triple_sets);

// Value-semantic set difference: g minus victims.
KnowledgeGraph remove_triples(const KnowledgeGraph& g, const TripleSet& victims);

}  // namespace eraser
