#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eraser/config.hpp"
#include "eraser/corpus.hpp"
#include "eraser/metrics.hpp"
#include "eraser/testsets.hpp"

namespace eraser {

struct DocumentEval {
    std::string doc_id;
    std::string query_id;
    bool evaluated = true;
    std::string failure;  // reason when !evaluated
    RetentionScores scores;
    double reward_value = 0.0;
    bool special = false;
    double latency_secs = 0.0;
};

struct GroupEval {
    std::string query_id;
    std::optional<double> r_connect;  // absent when the private graph is empty
    bool infer_member = false;
    std::size_t private_triples = 0;
    std::size_t connected_private_triples = 0;
    std::size_t unevaluated_docs = 0;
};

struct EvalAggregate {
    std::size_t documents = 0;
    std::size_t evaluated = 0;
    std::size_t unevaluated = 0;
    std::size_t groups = 0;
    std::size_t special_documents = 0;
    std::size_t infer_collections = 0;
    std::optional<double> mean_r_pri;
    std::optional<double> mean_r_pub;
    std::optional<double> r_connect;        // mean over groups
    std::optional<double> r_connect_infer;  // mean over inference-risk members
    std::optional<double> special_mean_r_pri;
    std::optional<double> special_mean_r_pub;
    std::optional<double> mean_reward;
    double p = 0.0;
    std::uint64_t iteration = 0;
    double mean_latency_secs = 0.0;
};

struct EvalReport {
    std::vector<DocumentEval> docs;    // query-major, doc_id order
    std::vector<GroupEval> groups;     // query_id order
    std::vector<SpecialMembership> special_members;
    std::vector<InferMembership> infer_members;
    EvalAggregate aggregate;
};

// Full evaluation run: partition each retrieval group, build the adversarial
// test sets, rewrite every document, re-extract, score retention and
// connectivity, and persist everything under cfg.out_dir. Remote failures
// mark individual documents unevaluated; only config/ingest errors abort.
EvalReport run_erasure_eval(const RunConfig& cfg);

struct QaResult {
    std::size_t eligible = 0;
    std::size_t excluded = 0;
    std::size_t correct = 0;
    std::size_t generation_failures = 0;  // remote failures, scored incorrect
    double accuracy = 0.0;
};

// Downstream QA over a completed run's rewritten documents. Queries whose
// question/answer entities are connected in the group's private graph are
// excluded; answers score by normalized exact-match containment. Throws
// UndefinedAccuracyError when nothing is eligible. Writes qa.json into the
// run directory.
QaResult run_downstream_qa(const RunConfig& cfg, const std::string& run_dir);

}  // namespace eraser
