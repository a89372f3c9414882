#include "eraser/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "eraser/error.hpp"
#include "eraser/extractor.hpp"
#include "eraser/json_util.hpp"
#include "eraser/remote.hpp"
#include "eraser/reward.hpp"
#include "eraser/rng.hpp"

namespace fs = std::filesystem;

namespace eraser {

namespace {

// Runs fn(i) for i in [0, n) on up to `parallelism` worker threads. Results
// land in index-stable slots, so downstream output order is deterministic.
// The first exception a worker raises is rethrown on the calling thread.
void parallel_for(std::size_t n, int parallelism, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(parallelism), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(n);  // drain remaining work
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::unique_ptr<Rewriter> build_rewriter(const RunConfig& cfg) {
    if (cfg.rewriter == "identity") return make_identity_rewriter();
    if (cfg.rewriter == "redact") return make_redaction_rewriter();
    if (cfg.rewriter == "remote") {
        if (cfg.endpoint.empty()) throw Error("rewriter=remote requires an endpoint");
        return make_remote_rewriter(cfg.endpoint_config());
    }
    return nullptr;  // sentence-drop is handled inline (needs the alignment)
}

std::unique_ptr<TripleExtractor> build_extractor(const RunConfig& cfg) {
    if (cfg.extractor == "pattern") return make_pattern_extractor();
    if (cfg.extractor == "remote") {
        if (cfg.endpoint.empty()) throw Error("extractor=remote requires an endpoint");
        return make_remote_extractor(cfg.endpoint_config());
    }
    return make_sidecar_extractor(cfg.extractor.substr(std::string("sidecar:").size()));
}

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

struct DocOutcome {
    RewriteResult rewrite;
    TripleSet rewritten_triples;
    bool evaluated = true;
    std::string failure;
};

}  // namespace

EvalReport run_erasure_eval(const RunConfig& cfg) {
    if (cfg.out_dir.empty()) throw Error("run requires an output directory");
    if (cfg.rewriter == "sentence-drop" && cfg.extractor.rfind("sidecar:", 0) == 0) {
        throw Error("sentence-drop needs a text-driven extractor for sentence alignment");
    }

    Corpus corpus = ingest(cfg.corpus_dir);
    std::unique_ptr<Rewriter> rewriter = build_rewriter(cfg);
    std::unique_ptr<TripleExtractor> extractor = build_extractor(cfg);

    fs::create_directories(cfg.out_dir);
    fs::create_directories(fs::path(cfg.out_dir) / "partitions");
    fs::create_directories(fs::path(cfg.out_dir) / "testsets");

    EvalReport report;
    std::vector<SpecialInputDoc> all_special_inputs;
    std::vector<InferInput> all_infer_inputs;
    std::string rewritten_jsonl;

    const double p = p_schedule(cfg.reward_iteration, cfg.reward_params);

    for (const QueryRecord& query : corpus.queries) {
        auto docs_it = corpus.docs_by_query.find(query.query_id);
        if (docs_it == corpus.docs_by_query.end()) continue;  // query with no documents
        const std::vector<DocumentRecord>& docs = docs_it->second;

        // global graph of the group
        std::vector<TripleSet> doc_triples;
        doc_triples.reserve(docs.size());
        for (const DocumentRecord& d : docs) {
            auto it = corpus.triples_by_doc.find(d.doc_id);
            doc_triples.push_back(it == corpus.triples_by_doc.end() ? TripleSet{} : it->second);
        }
        KnowledgeGraph global = merge_graphs(doc_triples);

        PrivacyPartition partition;
        if (cfg.partition_strategy == SampleStrategy::pinned) {
            const std::string path =
                (fs::path(cfg.corpus_dir) / "partitions" / (query.query_id + ".json")).string();
            if (!fs::exists(path)) {
                throw Error("pinned partition missing for query " + query.query_id);
            }
            partition = load_partition(path);
            verify_partition(partition, global);
        } else {
            PartitionConfig pcfg;
            pcfg.ratio = cfg.partition_ratio;
            pcfg.strategy = cfg.partition_strategy;
            pcfg.seed = derive_seed(cfg.seed, "partition:" + query.query_id);
            pcfg.query_triples = query.query_triples;
            partition = make_partition(global, pcfg);
        }
        save_partition(partition,
                       (fs::path(cfg.out_dir) / "partitions" / (query.query_id + ".json")).string());

        // local sets + test-set inputs
        std::vector<LocalSets> locals(docs.size());
        InferInput infer_input;
        infer_input.collection_id = query.query_id;
        infer_input.global = global;
        infer_input.private_graph = partition.private_graph;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            locals[i] = local_sets(doc_triples[i], partition);
            all_special_inputs.push_back({docs[i].doc_id, locals[i]});
            infer_input.docs.push_back({docs[i].doc_id, locals[i].g_all, locals[i].g_pri});
        }
        all_infer_inputs.push_back(std::move(infer_input));

        // rewrite + re-extract, bounded parallelism, index-stable results;
        // single-flight rewriters get their calls serialized
        std::vector<DocOutcome> outcomes(docs.size());
        const TripleSet global_private = partition.private_graph.triple_set();
        const TripleSet global_public = partition.public_graph.triple_set();
        const int rewrite_parallelism =
            (rewriter && rewriter->single_flight()) ? 1 : cfg.parallelism;
        parallel_for(docs.size(), rewrite_parallelism, [&](std::size_t i) {
            const DocumentRecord& doc = docs[i];
            DocOutcome& out = outcomes[i];
            RewriteRequest req;
            req.doc = doc;
            req.scope = cfg.scope;
            if (cfg.scope == RewriteScope::global) {
                req.private_triples = global_private;
                req.public_triples = global_public;
            } else {
                req.private_triples = locals[i].g_pri;
                req.public_triples = locals[i].g_pub;
            }
            auto started = std::chrono::steady_clock::now();
            try {
                if (cfg.rewriter == "sentence-drop") {
                    SentenceAlignment alignment;
                    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
                        alignment.push_back(extractor->extract(doc.doc_id, doc.sentence_text(s)));
                    }
                    out.rewrite = sentence_drop_rewrite(req, alignment);
                } else {
                    out.rewrite = rewriter->rewrite(req);
                }
                out.rewritten_triples = extractor->extract(doc.doc_id, out.rewrite.rewritten_text);
            } catch (const RemoteFailureError& e) {
                out.evaluated = false;
                out.failure = e.what();
            } catch (const MalformedResponseError& e) {
                out.evaluated = false;
                out.failure = e.what();
            }
            out.rewrite.doc_id = doc.doc_id;
            out.rewrite.latency_secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        });

        // per-document metrics
        GroupEval group;
        group.query_id = query.query_id;
        std::vector<TripleSet> rewritten_sets;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            DocumentEval de;
            de.doc_id = docs[i].doc_id;
            de.query_id = query.query_id;
            de.latency_secs = outcomes[i].rewrite.latency_secs;
            if (!outcomes[i].evaluated) {
                de.evaluated = false;
                de.failure = outcomes[i].failure;
                ++group.unevaluated_docs;
            } else {
                de.scores = retention_rates(outcomes[i].rewritten_triples, locals[i]);
                de.reward_value = reward(de.scores.r_pub, de.scores.r_pri, p);
                rewritten_sets.push_back(outcomes[i].rewritten_triples);
            }
            report.docs.push_back(std::move(de));

            json row{{"doc_id", docs[i].doc_id},
                     {"query_id", query.query_id},
                     {"evaluated", outcomes[i].evaluated},
                     {"failure", outcomes[i].failure},
                     {"text", outcomes[i].evaluated ? json(outcomes[i].rewrite.rewritten_text)
                                                    : json(nullptr)},
                     {"rewriter_id", outcomes[i].evaluated ? outcomes[i].rewrite.rewriter_id
                                                           : cfg.rewriter},
                     {"latency_secs", outcomes[i].rewrite.latency_secs}};
            rewritten_jsonl += row.dump() + "\n";
        }

        // cross-document connectivity on the rebuilt graph
        KnowledgeGraph rewritten_graph = merge_graphs(rewritten_sets);
        group.private_triples = partition.private_graph.size();
        if (!partition.private_graph.empty()) {
            double ratio = privacy_connection_ratio(partition.private_graph, rewritten_graph);
            group.r_connect = ratio;
            group.connected_private_triples = static_cast<std::size_t>(
                std::llround(ratio * static_cast<double>(partition.private_graph.size())));
        }
        report.groups.push_back(std::move(group));
    }

    // adversarial test sets over the whole corpus
    report.special_members = build_special(all_special_inputs);
    report.infer_members = build_infer(all_infer_inputs);

    std::set<std::string> special_ids;
    for (const SpecialMembership& m : report.special_members) special_ids.insert(m.doc_id);
    for (DocumentEval& d : report.docs) d.special = special_ids.count(d.doc_id) > 0;
    std::set<std::string> infer_ids;
    for (const InferMembership& m : report.infer_members) infer_ids.insert(m.collection_id);
    for (GroupEval& g : report.groups) g.infer_member = infer_ids.count(g.query_id) > 0;

    // aggregate
    EvalAggregate& agg = report.aggregate;
    agg.groups = report.groups.size();
    agg.p = p;
    agg.iteration = cfg.reward_iteration;
    agg.special_documents = report.special_members.size();
    agg.infer_collections = report.infer_members.size();
    double sum_pri = 0, sum_pub = 0, sum_reward = 0, sum_latency = 0;
    double sp_sum_pri = 0, sp_sum_pub = 0;
    std::size_t sp_n = 0;
    for (const DocumentEval& d : report.docs) {
        ++agg.documents;
        sum_latency += d.latency_secs;
        if (!d.evaluated) {
            ++agg.unevaluated;
            continue;
        }
        ++agg.evaluated;
        sum_pri += d.scores.r_pri;
        sum_pub += d.scores.r_pub;
        sum_reward += d.reward_value;
        if (d.special) {
            sp_sum_pri += d.scores.r_pri;
            sp_sum_pub += d.scores.r_pub;
            ++sp_n;
        }
    }
    if (agg.evaluated > 0) {
        agg.mean_r_pri = sum_pri / static_cast<double>(agg.evaluated);
        agg.mean_r_pub = sum_pub / static_cast<double>(agg.evaluated);
        agg.mean_reward = sum_reward / static_cast<double>(agg.evaluated);
    }
    if (sp_n > 0) {
        agg.special_mean_r_pri = sp_sum_pri / static_cast<double>(sp_n);
        agg.special_mean_r_pub = sp_sum_pub / static_cast<double>(sp_n);
    }
    if (agg.documents > 0) {
        agg.mean_latency_secs = sum_latency / static_cast<double>(agg.documents);
    }
    double sum_connect = 0, sum_connect_infer = 0;
    std::size_t n_connect = 0, n_connect_infer = 0;
    for (const GroupEval& g : report.groups) {
        if (!g.r_connect) continue;
        sum_connect += *g.r_connect;
        ++n_connect;
        if (g.infer_member) {
            sum_connect_infer += *g.r_connect;
            ++n_connect_infer;
        }
    }
    if (n_connect > 0) agg.r_connect = sum_connect / static_cast<double>(n_connect);
    if (n_connect_infer > 0) {
        agg.r_connect_infer = sum_connect_infer / static_cast<double>(n_connect_infer);
    }

    // persist the run
    write_file((fs::path(cfg.out_dir) / "manifest.json").string(), run_config_to_manifest(cfg));
    write_file((fs::path(cfg.out_dir) / "rewritten.jsonl").string(), rewritten_jsonl);
    write_file((fs::path(cfg.out_dir) / "testsets" / "special.jsonl").string(),
               special_to_jsonl(report.special_members));
    write_file((fs::path(cfg.out_dir) / "testsets" / "infer.jsonl").string(),
               infer_to_jsonl(report.infer_members));

    std::string per_doc_jsonl;
    for (const DocumentEval& d : report.docs) {
        json row{{"doc_id", d.doc_id},
                 {"query_id", d.query_id},
                 {"evaluated", d.evaluated},
                 {"failure", d.failure},
                 {"special", d.special},
                 {"latency_secs", d.latency_secs}};
        if (d.evaluated) {
            row["r_pri"] = d.scores.r_pri;
            row["r_pub"] = d.scores.r_pub;
            row["counts"] = {{"kept_private", d.scores.counts.kept_private},
                             {"total_private", d.scores.counts.total_private},
                             {"kept_public", d.scores.counts.kept_public},
                             {"total_public", d.scores.counts.total_public}};
            row["reward"] = d.reward_value;
        } else {
            row["r_pri"] = nullptr;
            row["r_pub"] = nullptr;
            row["counts"] = nullptr;
            row["reward"] = nullptr;
        }
        per_doc_jsonl += row.dump() + "\n";
    }
    write_file((fs::path(cfg.out_dir) / "per_document.jsonl").string(), per_doc_jsonl);

    std::string groups_jsonl;
    for (const GroupEval& g : report.groups) {
        json row{{"query_id", g.query_id},
                 {"r_connect", optional_to_json(g.r_connect)},
                 {"infer", g.infer_member},
                 {"private_triples", g.private_triples},
                 {"connected_private_triples", g.connected_private_triples},
                 {"unevaluated_docs", g.unevaluated_docs}};
        groups_jsonl += row.dump() + "\n";
    }
    write_file((fs::path(cfg.out_dir) / "groups.jsonl").string(), groups_jsonl);

    json agg_json{{"documents", agg.documents},
                  {"evaluated", agg.evaluated},
                  {"unevaluated", agg.unevaluated},
                  {"groups", agg.groups},
                  {"special_documents", agg.special_documents},
                  {"infer_collections", agg.infer_collections},
                  {"mean_r_pri", optional_to_json(agg.mean_r_pri)},
                  {"mean_r_pub", optional_to_json(agg.mean_r_pub)},
                  {"r_connect", optional_to_json(agg.r_connect)},
                  {"r_connect_infer", optional_to_json(agg.r_connect_infer)},
                  {"special_mean_r_pri", optional_to_json(agg.special_mean_r_pri)},
                  {"special_mean_r_pub", optional_to_json(agg.special_mean_r_pub)},
                  {"mean_reward", optional_to_json(agg.mean_reward)},
                  {"p", agg.p},
                  {"iteration", agg.iteration},
                  {"mean_latency_secs", agg.mean_latency_secs},
                  {"rewriter", cfg.rewriter},
                  {"extractor", cfg.extractor},
                  {"scope", to_string(cfg.scope)},
                  {"corpus", cfg.corpus_dir},
                  {"seed", cfg.seed},
                  // conventions: document rates average unweighted over evaluated
                  // documents (no private triples -> r_pri = 0, no public -> r_pub
                  // = 1); r_connect averages per-group ratios
                  {"aggregation",
                   {{"documents", "unweighted mean over evaluated documents"},
                    {"zero_denominators", "r_pri := 0, r_pub := 1"},
                    {"r_connect", "unweighted mean over groups with private triples"}}}};
    write_file((fs::path(cfg.out_dir) / "aggregate.json").string(), agg_json.dump(2) + "\n");

    return report;
}

QaResult run_downstream_qa(const RunConfig& cfg, const std::string& run_dir) {
    Corpus corpus = ingest(cfg.corpus_dir);

    // rewritten texts from the completed run
    std::map<std::string, std::string> rewritten_by_doc;
    std::map<std::string, bool> evaluated_by_doc;
    const std::string rewritten_path = (fs::path(run_dir) / "rewritten.jsonl").string();
    if (!fs::exists(rewritten_path)) {
        throw IncompleteRunError("run directory lacks rewritten.jsonl: " + run_dir);
    }
    for_each_jsonl(rewritten_path, [&](std::size_t, const json& row) {
        const std::string doc_id = row.at("doc_id").get<std::string>();
        bool evaluated = row.at("evaluated").get<bool>();
        evaluated_by_doc[doc_id] = evaluated;
        if (evaluated) rewritten_by_doc[doc_id] = row.at("text").get<std::string>();
    });

    std::unique_ptr<Generator> remote_generator;
    if (cfg.generator == "remote") {
        if (cfg.endpoint.empty()) throw Error("generator=remote requires an endpoint");
        remote_generator = make_remote_generator(cfg.endpoint_config());
    }

    QaResult result;
    for (const QueryRecord& query : corpus.queries) {
        const std::string partition_path =
            (fs::path(run_dir) / "partitions" / (query.query_id + ".json")).string();
        if (!fs::exists(partition_path)) {
            throw IncompleteRunError("run directory lacks partition for query " + query.query_id);
        }
        PrivacyPartition partition = load_partition(partition_path);

        // eligibility: no question entity may connect to an answer entity in
        // the private graph
        std::vector<std::string> question_entities;
        for (const Triple& t : query.query_triples) {
            question_entities.push_back(t.head());
            question_entities.push_back(t.tail());
        }
        bool eligible = true;
        for (const std::string& qe : question_entities) {
            for (const std::string& answer : query.answers) {
                std::string ae;
                try {
                    ae = normalize_entity(answer);
                } catch (const InvalidEntityError&) {
                    continue;
                }
                if (partition.private_graph.connected(qe, ae)) {
                    eligible = false;
                    break;
                }
            }
            if (!eligible) break;
        }
        if (!eligible) {
            ++result.excluded;
            continue;
        }
        ++result.eligible;

        std::vector<std::string> docs;
        auto docs_it = corpus.docs_by_query.find(query.query_id);
        if (docs_it != corpus.docs_by_query.end()) {
            for (const DocumentRecord& d : docs_it->second) {
                auto it = rewritten_by_doc.find(d.doc_id);
                if (it != rewritten_by_doc.end()) docs.push_back(it->second);
            }
        }

        std::string prediction;
        if (cfg.generator == "echo") {
            // harness oracle: answers with the gold answer
            prediction = query.answers.empty() ? "" : query.answers.front();
        } else {
            try {
                prediction = remote_generator->generate(query.text, docs);
            } catch (const RemoteFailureError&) {
                ++result.generation_failures;  // counted eligible but not correct
                continue;
            } catch (const MalformedResponseError&) {
                ++result.generation_failures;
                continue;
            }
        }
        if (answer_matches(prediction, query.answers)) ++result.correct;
    }

    if (result.eligible == 0) {
        throw UndefinedAccuracyError("no QA pair passes the privacy eligibility filter");
    }
    result.accuracy = static_cast<double>(result.correct) / static_cast<double>(result.eligible);

    json qa{{"acc", result.accuracy},
            {"eligible", result.eligible},
            {"excluded", result.excluded},
            {"correct", result.correct},
            {"generation_failures", result.generation_failures},
            {"generator", cfg.generator}};
    write_file((fs::path(run_dir) / "qa.json").string(), qa.dump(2) + "\n");
    return result;
}

}  // namespace eraser
