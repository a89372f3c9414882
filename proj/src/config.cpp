#include "eraser/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"

namespace eraser {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error("config key '" + key + "' expects a number, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error("config key '" + key + "' expects a non-negative integer, got '" + value +
                    "'");
    }
}

void apply_env_overrides(RunConfig& cfg) {
    if (const char* v = std::getenv("ERASER_ENDPOINT")) cfg.endpoint = v;
    if (const char* v = std::getenv("ERASER_PARALLELISM")) {
        cfg.parallelism = static_cast<int>(parse_u64("ERASER_PARALLELISM", v));
    }
    if (const char* v = std::getenv("ERASER_TIMEOUT_SECS")) {
        cfg.timeout_secs = parse_double("ERASER_TIMEOUT_SECS", v);
    }
}

void validate(const RunConfig& cfg) {
    if (!(cfg.partition_ratio > 0.0 && cfg.partition_ratio < 1.0)) {
        throw Error("partition.ratio must lie in (0,1)");
    }
    if (cfg.parallelism < 1) throw Error("parallelism must be at least 1");
    if (cfg.reward_params.step_interval == 0) throw Error("reward.step_interval must be positive");
    if (cfg.reward_params.p_init > cfg.reward_params.p_max) {
        throw Error("reward.p_init must not exceed reward.p_max");
    }
    if (cfg.rewriter != "identity" && cfg.rewriter != "redact" &&
        cfg.rewriter != "sentence-drop" && cfg.rewriter != "remote") {
        throw Error("unknown rewriter '" + cfg.rewriter + "'");
    }
    if (cfg.extractor != "pattern" && cfg.extractor != "remote" &&
        cfg.extractor.rfind("sidecar:", 0) != 0) {
        throw Error("unknown extractor '" + cfg.extractor + "'");
    }
    if (cfg.generator != "echo" && cfg.generator != "remote") {
        throw Error("unknown generator '" + cfg.generator + "'");
    }
}

}  // namespace

KeyValueConfig parse_config_text(const std::string& text) {
    KeyValueConfig kv;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw Error("config line " + std::to_string(line_no) + " is not 'key = value'");
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw Error("config line " + std::to_string(line_no) + " has an empty key");
        }
        kv[key] = value;
    }
    return kv;
}

KeyValueConfig load_config_file(const std::string& path) {
    return parse_config_text(read_file(path));
}

RunConfig run_config_from_kv(const KeyValueConfig& kv) {
    RunConfig cfg;
    for (const auto& [key, value] : kv) {
        if (key == "corpus") cfg.corpus_dir = value;
        else if (key == "out") cfg.out_dir = value;
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "partition.ratio") cfg.partition_ratio = parse_double(key, value);
        else if (key == "partition.strategy") cfg.partition_strategy = strategy_from_string(value);
        else if (key == "rewriter") cfg.rewriter = value;
        else if (key == "extractor") cfg.extractor = value;
        else if (key == "scope") cfg.scope = scope_from_string(value);
        else if (key == "generator") cfg.generator = value;
        else if (key == "endpoint") cfg.endpoint = value;
        else if (key == "timeout_secs") cfg.timeout_secs = parse_double(key, value);
        else if (key == "parallelism") cfg.parallelism = static_cast<int>(parse_u64(key, value));
        else if (key == "reward.p_init") cfg.reward_params.p_init = parse_double(key, value);
        else if (key == "reward.p_step") cfg.reward_params.p_step = parse_double(key, value);
        else if (key == "reward.step_interval") cfg.reward_params.step_interval = parse_u64(key, value);
        else if (key == "reward.p_max") cfg.reward_params.p_max = parse_double(key, value);
        else if (key == "reward.iteration") cfg.reward_iteration = parse_u64(key, value);
        else throw Error("unknown config key '" + key + "'");
    }
    apply_env_overrides(cfg);
    validate(cfg);
    return cfg;
}

std::string run_config_to_manifest(const RunConfig& cfg) {
    json j{{"corpus", cfg.corpus_dir},
           {"out", cfg.out_dir},
           {"seed", cfg.seed},
           {"partition", {{"ratio", cfg.partition_ratio},
                          {"strategy", to_string(cfg.partition_strategy)}}},
           {"rewriter", cfg.rewriter},
           {"extractor", cfg.extractor},
           {"scope", to_string(cfg.scope)},
           {"generator", cfg.generator},
           {"endpoint", cfg.endpoint},
           {"timeout_secs", cfg.timeout_secs},
           {"parallelism", cfg.parallelism},
           {"reward", {{"p_init", cfg.reward_params.p_init},
                       {"p_step", cfg.reward_params.p_step},
                       {"step_interval", cfg.reward_params.step_interval},
                       {"p_max", cfg.reward_params.p_max},
                       {"iteration", cfg.reward_iteration},
                       {"discount_factor", kPolicyDiscountFactor}}},
           {"prompt_version", kRewritePromptVersion}};
    return j.dump(2) + "\n";
}

RunConfig run_config_from_manifest(const std::string& text) {
    json j = json::parse(text);
    RunConfig cfg;
    cfg.corpus_dir = j.at("corpus").get<std::string>();
    cfg.out_dir = j.at("out").get<std::string>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.partition_ratio = j.at("partition").at("ratio").get<double>();
    cfg.partition_strategy = strategy_from_string(j.at("partition").at("strategy").get<std::string>());
    cfg.rewriter = j.at("rewriter").get<std::string>();
    cfg.extractor = j.at("extractor").get<std::string>();
    cfg.scope = scope_from_string(j.at("scope").get<std::string>());
    cfg.generator = j.value("generator", "echo");
    cfg.endpoint = j.at("endpoint").get<std::string>();
    cfg.timeout_secs = j.at("timeout_secs").get<double>();
    cfg.parallelism = j.at("parallelism").get<int>();
    cfg.reward_params.p_init = j.at("reward").at("p_init").get<double>();
    cfg.reward_params.p_step = j.at("reward").at("p_step").get<double>();
    cfg.reward_params.step_interval = j.at("reward").at("step_interval").get<std::uint64_t>();
    cfg.reward_params.p_max = j.at("reward").at("p_max").get<double>();
    cfg.reward_iteration = j.at("reward").at("iteration").get<std::uint64_t>();
    validate(cfg);
    return cfg;
}

}  // namespace eraser
