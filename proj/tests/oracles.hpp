#pragma once

// Independent reference implementations used to cross-check the library.
// Connectivity here is union-find based; the library uses breadth-first
// search, so agreement is a meaningful dual-route check.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "eraser/triple.hpp"

namespace oracles {

class UnionFind {
public:
    void add_entity(const std::string& e) { id(e); }

    void add_edge(const std::string& a, const std::string& b) {
        int ra = find(id(a));
        int rb = find(id(b));
        if (ra == rb) return;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
    }

    bool has(const std::string& e) const { return ids_.count(e) > 0; }

    bool same(const std::string& a, const std::string& b) {
        if (!has(a) || !has(b)) return false;
        return find(ids_.at(a)) == find(ids_.at(b));
    }

private:
    int id(const std::string& e) {
        auto it = ids_.find(e);
        if (it != ids_.end()) return it->second;
        int next = static_cast<int>(parent_.size());
        ids_.emplace(e, next);
        parent_.push_back(next);
        rank_.push_back(0);
        return next;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    std::map<std::string, int> ids_;
    std::vector<int> parent_;
    std::vector<int> rank_;
};

inline UnionFind union_find_of(const eraser::TripleSet& triples) {
    UnionFind uf;
    for (const eraser::Triple& t : triples) uf.add_edge(t.head(), t.tail());
    return uf;
}

inline bool uf_connected(const eraser::TripleSet& triples, const std::string& a,
                         const std::string& b) {
    UnionFind uf = union_find_of(triples);
    return uf.same(a, b);
}

// Brute-force transitive closure (Floyd-Warshall) over the entity set.
class Closure {
public:
    explicit Closure(const eraser::TripleSet& triples) {
        for (const eraser::Triple& t : triples) {
            index(t.head());
            index(t.tail());
        }
        std::size_t n = entities_.size();
        reach_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) reach_[i][i] = true;
        for (const eraser::Triple& t : triples) {
            std::size_t h = idx_.at(t.head());
            std::size_t l = idx_.at(t.tail());
            reach_[h][l] = reach_[l][h] = true;
        }
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!reach_[i][k]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (reach_[k][j]) reach_[i][j] = true;
                }
            }
        }
    }

    bool connected(const std::string& a, const std::string& b) const {
        auto ia = idx_.find(a);
        auto ib = idx_.find(b);
        if (ia == idx_.end() || ib == idx_.end()) return false;
        return reach_[ia->second][ib->second];
    }

private:
    void index(const std::string& e) {
        if (idx_.emplace(e, entities_.size()).second) entities_.push_back(e);
    }

    std::vector<std::string> entities_;
    std::map<std::string, std::size_t> idx_;
    std::vector<std::vector<bool>> reach_;
};

inline eraser::TripleSet random_triples(std::mt19937_64& rng, std::size_t max_entities,
                                        std::size_t max_triples) {
    std::uniform_int_distribution<std::size_t> entity_count(2, max_entities);
    std::size_t n_entities = entity_count(rng);
    std::uniform_int_distribution<std::size_t> triple_count(1, max_triples);
    std::size_t n_triples = triple_count(rng);
    std::uniform_int_distribution<std::size_t> entity(0, n_entities - 1);
    std::uniform_int_distribution<std::size_t> relation(0, 5);

    eraser::TripleSet out;
    for (std::size_t i = 0; i < n_triples; ++i) {
        out.insert(eraser::Triple("e" + std::to_string(entity(rng)),
                                  "r" + std::to_string(relation(rng)),
                                  "e" + std::to_string(entity(rng))));
    }
    return out;
}

inline std::string random_entity_of(const eraser::TripleSet& triples, std::mt19937_64& rng,
                                    std::size_t max_entities) {
    // half the time an entity that may not occur in the graph
    std::uniform_int_distribution<std::size_t> entity(0, 2 * max_entities);
    return "e" + std::to_string(entity(rng));
}

}  // namespace oracles
