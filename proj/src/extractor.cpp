#include "eraser/extractor.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"

namespace eraser {

namespace {

class SidecarExtractor final : public TripleExtractor {
public:
    explicit SidecarExtractor(const std::string& path) : path_(path) {
        for_each_jsonl(path, [this](std::size_t, const json& row) {
            if (!row.contains("doc_id")) throw Error("triple row requires doc_id");
            by_doc_[row.at("doc_id").get<std::string>()].insert(triple_from_json(row));
        });
    }

    TripleSet extract(const std::string& doc_id, const std::string&) override {
        auto it = by_doc_.find(doc_id);
        return it == by_doc_.end() ? TripleSet{} : it->second;
    }

    std::string id() const override { return "sidecar:" + path_; }

private:
    std::string path_;
    std::map<std::string, TripleSet> by_doc_;
};

class PatternExtractor final : public TripleExtractor {
public:
    TripleSet extract(const std::string&, const std::string& text) override {
        TripleSet out;
        std::size_t start = 0;
        while (start < text.size()) {
            std::size_t stop = text.find('.', start);
            if (stop == std::string::npos) break;
            parse_sentence(text.substr(start, stop - start), out);
            start = stop + 1;
        }
        return out;
    }

    std::string id() const override { return "pattern"; }

private:
    static void parse_sentence(const std::string& sentence, TripleSet& out) {
        std::istringstream in(sentence);
        std::vector<std::string> tokens;
        std::string tok;
        while (in >> tok) tokens.push_back(tok);

        std::size_t relation_idx = tokens.size();
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].find('_') != std::string::npos) {
                if (relation_idx != tokens.size()) return;  // two relation tokens: no match
                relation_idx = i;
            }
        }
        if (relation_idx == 0 || relation_idx + 1 >= tokens.size()) return;

        auto join = [&tokens](std::size_t from, std::size_t to) {
            std::string s;
            for (std::size_t i = from; i < to; ++i) {
                if (!s.empty()) s.push_back(' ');
                s += tokens[i];
            }
            return s;
        };
        out.insert(Triple(join(0, relation_idx), tokens[relation_idx],
                          join(relation_idx + 1, tokens.size())));
    }
};

}  // namespace

std::unique_ptr<TripleExtractor> make_sidecar_extractor(const std::string& jsonl_path) {
    return std::make_unique<SidecarExtractor>(jsonl_path);
}

std::unique_ptr<TripleExtractor> make_pattern_extractor() {
    return std::make_unique<PatternExtractor>();
}

}  // namespace eraser
