#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "eraser/partition.hpp"
#include "eraser/remote.hpp"
#include "eraser/reward.hpp"
#include "eraser/rewriter.hpp"

namespace eraser {

// Line-oriented key/value configuration: one `key = value` per line, '#'
// starts a comment. Unknown keys are rejected when assembled into a
// RunConfig so typos fail fast.
using KeyValueConfig = std::map<std::string, std::string>;

KeyValueConfig parse_config_text(const std::string& text);
KeyValueConfig load_config_file(const std::string& path);

// Everything a run needs; fully serialized into the run manifest so a
// manifest replays to identical non-remote results.
struct RunConfig {
    std::string corpus_dir;
    std::string out_dir;
    std::uint64_t seed = 0;

    double partition_ratio = 0.25;
    SampleStrategy partition_strategy = SampleStrategy::uniform;

    std::string rewriter = "identity";   // identity | redact | sentence-drop | remote
    std::string extractor = "pattern";   // pattern | remote | sidecar:<path>
    RewriteScope scope = RewriteScope::global;
    std::string generator = "echo";      // echo | remote

    std::string endpoint;
    double timeout_secs = 30.0;
    int parallelism = 4;

    RewardParams reward_params;
    std::uint64_t reward_iteration = 0;

    EndpointConfig endpoint_config() const {
        return EndpointConfig{endpoint, timeout_secs, parallelism};
    }
};

// Builds a RunConfig from parsed key/values, then applies the environment
// overrides ERASER_ENDPOINT, ERASER_PARALLELISM and ERASER_TIMEOUT_SECS.
// Throws Error on unknown keys or out-of-range values.
RunConfig run_config_from_kv(const KeyValueConfig& kv);

// Manifest (de)serialization; the manifest is JSON and round-trips exactly.
std::string run_config_to_manifest(const RunConfig& cfg);
RunConfig run_config_from_manifest(const std::string& text);

}  // namespace eraser
