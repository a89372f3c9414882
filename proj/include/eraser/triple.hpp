#pragma once

#include <compare>
#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace eraser {

// Canonicalizes an entity or relation string: trims, collapses internal
// whitespace runs to single spaces, and lowercases ASCII letters (bytes
// outside ASCII pass through, so UTF-8 input stays intact).
// Throws InvalidEntityError when nothing remains.
std::string normalize_entity(std::string_view raw);

// A (head, relation, tail) fact. All three fields are stored normalized and
// non-empty; equality and ordering are plain lexicographic comparison on the
// field triple.
class Triple {
public:
    Triple(std::string_view head, std::string_view relation, std::string_view tail);

    const std::string& head() const { return head_; }
    const std::string& relation() const { return relation_; }
    const std::string& tail() const { return tail_; }

    auto operator<=>(const Triple&) const = default;

private:
    std::string head_;
    std::string relation_;
    std::string tail_;
};

// Ordered set; iteration order is the canonical (lexicographic) order used
// by the linearizer and all serialized output.
using TripleSet = std::set<Triple>;

struct TripleHash {
    std::size_t operator()(const Triple& t) const {
        std::size_t h = std::hash<std::string>{}(t.head());
        h ^= std::hash<std::string>{}(t.relation()) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.tail()) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace eraser
