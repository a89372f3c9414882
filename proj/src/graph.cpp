#include "eraser/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace eraser {

KnowledgeGraph::KnowledgeGraph(const TripleSet& triples)
    : triples_(triples.begin(), triples.end()) {
    for (std::uint32_t idx = 0; idx < triples_.size(); ++idx) {
        const Triple& t = triples_[idx];
        entity_index_[t.head()].push_back(idx);
        if (t.tail() != t.head()) {
            entity_index_[t.tail()].push_back(idx);
        }
    }
}

bool KnowledgeGraph::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

bool KnowledgeGraph::has_entity(std::string_view entity) const {
    return entity_index_.find(std::string(entity)) != entity_index_.end();
}

std::vector<std::string> KnowledgeGraph::entities() const {
    std::vector<std::string> out;
    out.reserve(entity_index_.size());
    for (const auto& [entity, _] : entity_index_) out.push_back(entity);
    std::sort(out.begin(), out.end());
    return out;
}

bool KnowledgeGraph::connected(std::string_view a, std::string_view b) const {
    std::string start(a);
    std::string goal(b);
    if (!has_entity(start) || !has_entity(goal)) return false;
    if (start == goal) return true;

    std::unordered_set<std::string> seen{start};
    std::deque<std::string> frontier{start};
    while (!frontier.empty()) {
        std::string cur = std::move(frontier.front());
        frontier.pop_front();
        for (std::uint32_t idx : entity_index_.at(cur)) {
            const Triple& t = triples_[idx];
            const std::string& next = (t.head() == cur) ? t.tail() : t.head();
            if (next == goal) return true;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return false;
}

KnowledgeGraph merge_graphs(const std::vector<TripleSet>& triple_sets) {
    TripleSet merged;
    for (const TripleSet& s : triple_sets) merged.insert(s.begin(), s.end());
    return KnowledgeGraph(merged);
}

KnowledgeGraph remove_triples(const KnowledgeGraph& g, const TripleSet& victims) {
    TripleSet kept;
    for (const Triple& t : g.triples()) {
        if (victims.count(t) == 0) kept.insert(t);
    }
    return KnowledgeGraph(kept);
}

}  // namespace eraser
