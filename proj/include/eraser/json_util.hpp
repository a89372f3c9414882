#pragma once

#include <fstream>
#include <functional>
#include <string>

#include <json.hpp>

#include "eraser/error.hpp"
#include "eraser/triple.hpp"

namespace eraser {

using nlohmann::json;

inline json triple_to_json(const Triple& t) {
    return json{{"head", t.head()}, {"relation", t.relation()}, {"tail", t.tail()}};
}

inline Triple triple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("head") || !j.contains("relation") || !j.contains("tail")) {
        throw SchemaViolationError("triple object requires head, relation, tail fields");
    }
    return Triple(j.at("head").get<std::string>(), j.at("relation").get<std::string>(),
                  j.at("tail").get<std::string>());
}

inline json triples_to_json(const TripleSet& triples) {
    json arr = json::array();
    for (const Triple& t : triples) arr.push_back(triple_to_json(t));
    return arr;
}

inline TripleSet triples_from_json(const json& arr) {
    if (!arr.is_array()) throw SchemaViolationError("expected an array of triples");
    TripleSet out;
    for (const json& j : arr) out.insert(triple_from_json(j));
    return out;
}

// Streams a JSONL file, invoking fn(line_number, parsed) per non-empty line.
// Wraps parse and schema errors with file/line context.
inline void for_each_jsonl(const std::string& path,
                           const std::function<void(std::size_t, const json&)>& fn) {
    std::ifstream in(path);
    if (!in) throw SchemaViolationError("cannot open " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json parsed;
        try {
            parsed = json::parse(line);
        } catch (const json::parse_error& e) {
            throw SchemaViolationError(path, line_no, e.what());
        }
        try {
            fn(line_no, parsed);
        } catch (const DanglingReferenceError&) {
            throw;
        } catch (const Error& e) {
            throw SchemaViolationError(path, line_no, e.what());
        } catch (const json::exception& e) {
            throw SchemaViolationError(path, line_no, e.what());
        }
    }
}

// Bare triple-set files: JSONL, one {head, relation, tail} object per line,
// raw or pre-normalized (the loader normalizes either way).
inline TripleSet load_triple_set_jsonl(const std::string& path) {
    TripleSet out;
    for_each_jsonl(path, [&out](std::size_t, const json& row) { out.insert(triple_from_json(row)); });
    return out;
}

inline void save_triple_set_jsonl(const TripleSet& triples, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    for (const Triple& t : triples) out << triple_to_json(t).dump() << "\n";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace eraser
