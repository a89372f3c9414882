#include "eraser/synth.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"
#include "eraser/partition.hpp"
#include "eraser/rng.hpp"

namespace fs = std::filesystem;

namespace eraser {

namespace {

struct PlannedSentence {
    Triple triple;
    enum class Side { private_side, public_side, dropped_public } side;

    PlannedSentence(Triple t, Side s) : triple(std::move(t)), side(s) {}
};

std::string sentence_for(const Triple& t) {
    return t.head() + " " + t.relation() + " " + t.tail() + ".";
}

void append_jsonl(std::string& out, const json& j) { out += j.dump() + "\n"; }

}  // namespace

SynthExpectations generate_synthetic(const SynthSpec& spec, const std::string& corpus_dir) {
    if (spec.queries == 0 || spec.docs_per_query == 0) {
        throw Error("synthetic spec requires at least one query and one document");
    }
    if (spec.private_fillers_per_doc == 0 || spec.public_fillers_per_doc == 0) {
        throw Error("synthetic spec requires at least one private and one public filler per document");
    }
    if (spec.planted_chains > 0 && spec.docs_per_query < 4) {
        throw Error("planted inference chains need at least 4 documents per query");
    }
    if (spec.private_query_groups > spec.queries) {
        throw Error("private_query_groups exceeds the number of queries");
    }

    fs::create_directories(corpus_dir);
    fs::create_directories(fs::path(corpus_dir) / "partitions");

    std::string queries_jsonl, docs_jsonl, triples_jsonl, alignment_jsonl;
    SynthExpectations expected;
    double r_connect_sum = 0.0;

    const std::size_t k = spec.docs_per_query;
    for (std::size_t g = 0; g < spec.queries; ++g) {
        const std::string qid = "q" + std::to_string(g);
        const std::string gp = qid;  // entity namespace prefix for the group

        std::vector<std::vector<PlannedSentence>> doc_plan(k);
        TripleSet private_side, public_side, dropped_public;

        for (std::size_t d = 0; d < k; ++d) {
            const std::string dp = gp + "d" + std::to_string(d);
            for (std::size_t i = 0; i < spec.private_fillers_per_doc; ++i) {
                Triple t(dp + " pa" + std::to_string(i), "rel_priv" + std::to_string(i),
                         dp + " pb" + std::to_string(i));
                private_side.insert(t);
                doc_plan[d].emplace_back(t, PlannedSentence::Side::private_side);
            }
            for (std::size_t i = 0; i < spec.public_fillers_per_doc; ++i) {
                Triple t(dp + " ca" + std::to_string(i), "rel_pub" + std::to_string(i),
                         dp + " cb" + std::to_string(i));
                public_side.insert(t);
                doc_plan[d].emplace_back(t, PlannedSentence::Side::public_side);
            }
        }

        for (std::size_t c = 0; c < spec.planted_chains; ++c) {
            const std::string cp = gp + "ch" + std::to_string(c);
            const std::string a = cp + "a", b = cp + "b", m = cp + "m";
            Triple p1(a, "rel_p1", b);
            Triple p2(b, "rel_p2", m);
            Triple c1(a, "rel_c1", m);
            Triple c2(m, "rel_c2", b);
            private_side.insert(p1);
            private_side.insert(p2);
            dropped_public.insert(c1);
            dropped_public.insert(c2);
            doc_plan[(4 * c) % k].emplace_back(p1, PlannedSentence::Side::private_side);
            doc_plan[(4 * c + 1) % k].emplace_back(c1, PlannedSentence::Side::dropped_public);
            doc_plan[(4 * c + 2) % k].emplace_back(c2, PlannedSentence::Side::dropped_public);
            doc_plan[(4 * c + 3) % k].emplace_back(p2, PlannedSentence::Side::private_side);
        }

        for (std::size_t s = 0; s < spec.special_docs; ++s) {
            const std::string sp = gp + "sp" + std::to_string(s);
            const std::size_t d = s % k;
            Triple pri(sp + "a", "rel_s1", sp + "t");
            Triple pub(sp + "b", "rel_s2", sp + "t");
            private_side.insert(pri);
            public_side.insert(pub);
            doc_plan[d].emplace_back(pri, PlannedSentence::Side::private_side);
            doc_plan[d].emplace_back(pub, PlannedSentence::Side::public_side);
            expected.special_docs.push_back(gp + "d" + std::to_string(d));
        }

        // query: references a public filler's entities (eligible for QA), or a
        // private filler's in the leading private_query_groups (ineligible)
        const bool private_query = g < spec.private_query_groups;
        const std::string anchor = gp + "d0";
        Triple query_triple = private_query
                                  ? Triple(anchor + " pa0", "rel_q", anchor + " pb0")
                                  : Triple(anchor + " ca0", "rel_q", anchor + " cb0");
        json q{{"query_id", qid},
               {"text", "which entity relates to " + query_triple.head() + "?"},
               {"answers", json::array({query_triple.tail()})},
               {"query_triples", json::array({triple_to_json(query_triple)})}};
        append_jsonl(queries_jsonl, q);

        // lay out documents: deterministic shuffle, then emit text + spans
        for (std::size_t d = 0; d < k; ++d) {
            const std::string doc_id = gp + "d" + std::to_string(d);
            auto rng = make_rng(spec.seed, "synth-order:" + doc_id);
            std::shuffle(doc_plan[d].begin(), doc_plan[d].end(), rng);

            std::string text;
            json spans = json::array();
            for (std::size_t i = 0; i < doc_plan[d].size(); ++i) {
                if (!text.empty()) text.push_back(' ');
                std::size_t begin = text.size();
                text += sentence_for(doc_plan[d][i].triple);
                spans.push_back(json::array({begin, text.size()}));
            }
            json doc{{"doc_id", doc_id},
                     {"query_id", qid},
                     {"text", text},
                     {"sentences", spans}};
            append_jsonl(docs_jsonl, doc);

            for (std::size_t i = 0; i < doc_plan[d].size(); ++i) {
                const Triple& t = doc_plan[d][i].triple;
                json row = triple_to_json(t);
                row["doc_id"] = doc_id;
                append_jsonl(triples_jsonl, row);

                json arow = triple_to_json(t);
                arow["doc_id"] = doc_id;
                arow["sentence"] = i;
                append_jsonl(alignment_jsonl, arow);
            }
        }

        // pinned partition: valid by construction (each side's entities are
        // disjoint from the other's except through dropped triples)
        PrivacyPartition part;
        part.config.strategy = SampleStrategy::pinned;
        part.config.seed = spec.seed;
        part.config.query_triples = {query_triple};
        const double total = static_cast<double>(private_side.size() + public_side.size() +
                                                 dropped_public.size());
        part.config.ratio = static_cast<double>(private_side.size()) / total;
        part.private_graph = KnowledgeGraph(private_side);
        part.public_graph = KnowledgeGraph(public_side);
        part.dropped_public = dropped_public;
        save_partition(part, (fs::path(corpus_dir) / "partitions" / (qid + ".json")).string());

        // after the sentence-drop oracle only each chain's two private edges
        // stay connected (through the surviving dropped-public alternates)
        r_connect_sum += static_cast<double>(2 * spec.planted_chains) /
                         static_cast<double>(private_side.size());
        if (spec.planted_chains > 0) expected.infer_members.push_back(qid);
    }

    expected.sentence_drop_r_connect = r_connect_sum / static_cast<double>(spec.queries);
    std::sort(expected.special_docs.begin(), expected.special_docs.end());
    expected.special_docs.erase(
        std::unique(expected.special_docs.begin(), expected.special_docs.end()),
        expected.special_docs.end());

    write_file((fs::path(corpus_dir) / "queries.jsonl").string(), queries_jsonl);
    write_file((fs::path(corpus_dir) / "docs.jsonl").string(), docs_jsonl);
    write_file((fs::path(corpus_dir) / "triples.jsonl").string(), triples_jsonl);
    write_file((fs::path(corpus_dir) / "alignment.jsonl").string(), alignment_jsonl);

    json exp{{"identity",
              {{"r_pri", expected.identity_r_pri},
               {"r_pub", expected.identity_r_pub},
               {"r_connect", expected.identity_r_connect}}},
             {"redact",
              {{"r_pri", expected.redact_r_pri},
               {"r_pub", expected.redact_r_pub},
               {"r_connect", expected.redact_r_connect}}},
             {"sentence_drop",
              {{"r_pri", expected.sentence_drop_r_pri},
               {"r_pub", expected.sentence_drop_r_pub},
               {"r_connect", expected.sentence_drop_r_connect}}},
             {"infer_members", expected.infer_members},
             {"special_docs", expected.special_docs}};
    write_file((fs::path(corpus_dir) / "expected.json").string(), exp.dump(2) + "\n");

    return expected;
}

SynthExpectations load_expectations(const std::string& corpus_dir) {
    json j = json::parse(read_file((fs::path(corpus_dir) / "expected.json").string()));
    SynthExpectations e;
    e.identity_r_pri = j.at("identity").at("r_pri").get<double>();
    e.identity_r_pub = j.at("identity").at("r_pub").get<double>();
    e.identity_r_connect = j.at("identity").at("r_connect").get<double>();
    e.redact_r_pri = j.at("redact").at("r_pri").get<double>();
    e.redact_r_pub = j.at("redact").at("r_pub").get<double>();
    e.redact_r_connect = j.at("redact").at("r_connect").get<double>();
    e.sentence_drop_r_pri = j.at("sentence_drop").at("r_pri").get<double>();
    e.sentence_drop_r_pub = j.at("sentence_drop").at("r_pub").get<double>();
    e.sentence_drop_r_connect = j.at("sentence_drop").at("r_connect").get<double>();
    e.infer_members = j.at("infer_members").get<std::vector<std::string>>();
    e.special_docs = j.at("special_docs").get<std::vector<std::string>>();
    return e;
}

}  // namespace eraser
