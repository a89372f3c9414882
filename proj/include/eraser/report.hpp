#pragma once

#include <string>
#include <vector>

namespace eraser {

// Aggregate numbers loaded back from a completed run directory, for
// cross-run comparison.
struct RunSummary {
    std::string run_dir;
    std::string rewriter;
    double r_pri = 0.0;
    double r_pub = 0.0;
    double r_connect = 0.0;
    double reward = 0.0;
    double acc = 0.0;
    double mean_latency_secs = 0.0;
    bool has_r_pri = false, has_r_pub = false, has_r_connect = false, has_reward = false,
         has_acc = false;
};

// Throws IncompleteRunError when aggregate.json is missing.
RunSummary load_run_summary(const std::string& run_dir);

// One row per run; numeric cells render via JSON serialization, so the table
// is lossless for doubles.
std::string render_table(const std::vector<RunSummary>& runs);
std::string render_json(const std::vector<RunSummary>& runs);

}  // namespace eraser
