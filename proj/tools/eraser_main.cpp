// eraser: evaluate privacy erasure of retrieved documents.
//
// Subcommands: ingest, synth, partition, testsets, evaluate, qa,
// reward-trace, report. See README.md for formats and examples.

#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "eraser/config.hpp"
#include "eraser/error.hpp"
#include "eraser/json_util.hpp"
#include "eraser/pipeline.hpp"
#include "eraser/report.hpp"
#include "eraser/reward.hpp"
#include "eraser/rng.hpp"
#include "eraser/synth.hpp"

namespace fs = std::filesystem;
using namespace eraser;

namespace {

struct GlobalFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out;
};

RunConfig assemble_config(const GlobalFlags& flags) {
    KeyValueConfig kv;
    if (!flags.config_path.empty()) kv = load_config_file(flags.config_path);
    RunConfig cfg = run_config_from_kv(kv);
    if (flags.seed) cfg.seed = *flags.seed;
    if (!flags.out.empty()) cfg.out_dir = flags.out;
    return cfg;
}

int cmd_ingest(const std::string& corpus_dir) {
    Corpus corpus = ingest(corpus_dir);
    std::cout << "queries:   " << corpus.queries.size() << "\n"
              << "documents: " << corpus.document_count() << "\n"
              << "triples:   " << corpus.triple_count() << "\n";
    return 0;
}

int cmd_report(const std::vector<std::string>& run_dirs, const std::string& format) {
    std::vector<RunSummary> runs;
    runs.reserve(run_dirs.size());
    for (const std::string& dir : run_dirs) runs.push_back(load_run_summary(dir));
    std::cout << (format == "json" ? render_json(runs) : render_table(runs));
    return 0;
}

int cmd_reward_trace(const std::string& run_dir, std::uint64_t iteration) {
    const std::string manifest_path = (fs::path(run_dir) / "manifest.json").string();
    const std::string per_doc_path = (fs::path(run_dir) / "per_document.jsonl").string();
    if (!fs::exists(manifest_path) || !fs::exists(per_doc_path)) {
        throw IncompleteRunError("run directory lacks manifest.json or per_document.jsonl");
    }
    RunConfig cfg = run_config_from_manifest(read_file(manifest_path));
    const double p = p_schedule(iteration, cfg.reward_params);

    double sum = 0.0;
    std::size_t n = 0;
    for_each_jsonl(per_doc_path, [&](std::size_t, const json& row) {
        if (!row.at("evaluated").get<bool>()) return;
        double r = reward(row.at("r_pub").get<double>(), row.at("r_pri").get<double>(), p);
        std::cout << row.at("doc_id").get<std::string>() << "\t" << json(r).dump() << "\n";
        sum += r;
        ++n;
    });
    if (n == 0) {
        std::cout << "mean\t-\n";
    } else {
        std::cout << "mean\t" << json(sum / static_cast<double>(n)).dump() << "\n";
    }
    std::cout << "p\t" << json(p).dump() << "\niteration\t" << iteration << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"privacy erasure evaluation toolkit for retrieval-augmented generation"};
    app.require_subcommand(1);
    app.fallthrough();  // let --seed/--out/--config follow the subcommand

    GlobalFlags flags;
    app.add_option("--config", flags.config_path, "key=value config file");
    app.add_option("--seed", flags.seed, "override the run seed");
    app.add_option("--out", flags.out, "override the output directory");

    // ingest
    std::string corpus_dir;
    CLI::App* ingest_cmd = app.add_subcommand("ingest", "validate a corpus directory");
    ingest_cmd->add_option("corpus", corpus_dir, "corpus directory")->required();

    // synth
    SynthSpec synth_spec;
    std::string synth_out;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic corpus");
    synth_cmd->add_option("--queries", synth_spec.queries, "retrieval groups");
    synth_cmd->add_option("--docs-per-query", synth_spec.docs_per_query, "documents per group");
    synth_cmd->add_option("--private-fillers", synth_spec.private_fillers_per_doc,
                          "private facts per document");
    synth_cmd->add_option("--public-fillers", synth_spec.public_fillers_per_doc,
                          "public facts per document");
    synth_cmd->add_option("--chains", synth_spec.planted_chains,
                          "cross-document inference chains per group");
    synth_cmd->add_option("--special-docs", synth_spec.special_docs,
                          "shared-tail documents per group");
    synth_cmd->add_option("--private-queries", synth_spec.private_query_groups,
                          "groups whose query touches private entities");

    // partition
    std::string part_corpus, part_strategy = "uniform";
    double part_ratio = 0.25;
    CLI::App* part_cmd = app.add_subcommand("partition", "partition each retrieval group");
    part_cmd->add_option("--corpus", part_corpus, "corpus directory")->required();
    part_cmd->add_option("--ratio", part_ratio, "private sampling ratio");
    part_cmd->add_option("--strategy", part_strategy, "uniform | connected-walk");

    // testsets
    std::string ts_corpus, ts_strategy = "uniform";
    double ts_ratio = 0.25;
    CLI::App* ts_cmd = app.add_subcommand("testsets", "build the adversarial test sets");
    ts_cmd->add_option("--corpus", ts_corpus, "corpus directory")->required();
    ts_cmd->add_option("--ratio", ts_ratio, "private sampling ratio");
    ts_cmd->add_option("--strategy", ts_strategy, "uniform | connected-walk | pinned");

    // evaluate
    std::string eval_corpus, eval_rewriter, eval_extractor, eval_scope, eval_strategy;
    std::string eval_endpoint, eval_replay;
    std::optional<double> eval_ratio;
    std::optional<std::uint64_t> eval_iteration;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "run the erasure evaluation");
    eval_cmd->add_option("--corpus", eval_corpus, "corpus directory");
    eval_cmd->add_option("--rewriter", eval_rewriter, "identity | redact | sentence-drop | remote");
    eval_cmd->add_option("--extractor", eval_extractor, "pattern | remote | sidecar:<path>");
    eval_cmd->add_option("--scope", eval_scope, "global | per-document");
    eval_cmd->add_option("--strategy", eval_strategy, "uniform | connected-walk | pinned");
    eval_cmd->add_option("--ratio", eval_ratio, "private sampling ratio");
    eval_cmd->add_option("--endpoint", eval_endpoint, "remote service URL");
    eval_cmd->add_option("--iteration", eval_iteration, "reward schedule iteration");
    eval_cmd->add_option("--replay", eval_replay, "replay a run manifest");

    // qa
    std::string qa_run, qa_generator, qa_endpoint;
    CLI::App* qa_cmd = app.add_subcommand("qa", "downstream QA over a completed run");
    qa_cmd->add_option("--run", qa_run, "run directory")->required();
    qa_cmd->add_option("--generator", qa_generator, "echo | remote");
    qa_cmd->add_option("--endpoint", qa_endpoint, "generator service URL");

    // reward-trace
    std::string rt_run;
    std::uint64_t rt_iteration = 0;
    CLI::App* rt_cmd = app.add_subcommand("reward-trace",
                                          "per-document rewards at an iteration index");
    rt_cmd->add_option("--run", rt_run, "run directory")->required();
    rt_cmd->add_option("--iteration", rt_iteration, "reward schedule iteration");

    // report
    std::vector<std::string> report_runs;
    std::string report_format = "table";
    CLI::App* report_cmd = app.add_subcommand("report", "compare completed runs");
    report_cmd->add_option("runs", report_runs, "run directories")->required();
    report_cmd->add_option("--format", report_format, "table | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest_cmd) return cmd_ingest(corpus_dir);

        if (*synth_cmd) {
            if (flags.out.empty()) throw Error("synth requires --out");
            synth_spec.seed = flags.seed.value_or(0);
            SynthExpectations exp = generate_synthetic(synth_spec, flags.out);
            std::cout << "corpus written to " << flags.out << "\n"
                      << "inference-risk groups: " << exp.infer_members.size() << "\n"
                      << "shared-tail documents: " << exp.special_docs.size() << "\n";
            return 0;
        }

        if (*part_cmd || *ts_cmd) {
            RunConfig cfg = assemble_config(flags);
            cfg.corpus_dir = *part_cmd ? part_corpus : ts_corpus;
            cfg.partition_ratio = *part_cmd ? part_ratio : ts_ratio;
            cfg.partition_strategy = strategy_from_string(*part_cmd ? part_strategy : ts_strategy);
            if (cfg.out_dir.empty()) throw Error("this subcommand requires --out");
            // a metrics-free pass: identity rewriting touches nothing remote
            cfg.rewriter = "identity";
            cfg.extractor = "pattern";
            EvalReport report = run_erasure_eval(cfg);
            if (*part_cmd) {
                std::cout << "partitions written to " << cfg.out_dir << "/partitions ("
                          << report.groups.size() << " groups)\n";
            } else {
                std::cout << "test sets written to " << cfg.out_dir << "/testsets (special="
                          << report.special_members.size()
                          << ", infer=" << report.infer_members.size() << ")\n";
            }
            return 0;
        }

        if (*eval_cmd) {
            RunConfig cfg;
            if (!eval_replay.empty()) {
                cfg = run_config_from_manifest(read_file(eval_replay));
                if (!flags.out.empty()) cfg.out_dir = flags.out;
                if (flags.seed) cfg.seed = *flags.seed;
            } else {
                cfg = assemble_config(flags);
            }
            if (!eval_corpus.empty()) cfg.corpus_dir = eval_corpus;
            if (!eval_rewriter.empty()) cfg.rewriter = eval_rewriter;
            if (!eval_extractor.empty()) cfg.extractor = eval_extractor;
            if (!eval_scope.empty()) cfg.scope = scope_from_string(eval_scope);
            if (!eval_strategy.empty()) cfg.partition_strategy = strategy_from_string(eval_strategy);
            if (eval_ratio) cfg.partition_ratio = *eval_ratio;
            if (!eval_endpoint.empty()) cfg.endpoint = eval_endpoint;
            if (eval_iteration) cfg.reward_iteration = *eval_iteration;
            if (cfg.corpus_dir.empty()) throw Error("evaluate requires a corpus");
            if (cfg.out_dir.empty()) throw Error("evaluate requires --out");

            EvalReport report = run_erasure_eval(cfg);
            const EvalAggregate& a = report.aggregate;
            std::cout << "documents " << a.documents << " (unevaluated " << a.unevaluated
                      << ")\n";
            auto show = [](const char* name, const std::optional<double>& v) {
                std::cout << name << " " << (v ? json(*v).dump() : std::string("-")) << "\n";
            };
            show("mean_r_pri", a.mean_r_pri);
            show("mean_r_pub", a.mean_r_pub);
            show("r_connect", a.r_connect);
            show("mean_reward", a.mean_reward);
            std::cout << "report written to " << cfg.out_dir << "\n";
            return 0;
        }

        if (*qa_cmd) {
            const std::string manifest_path = (fs::path(qa_run) / "manifest.json").string();
            if (!fs::exists(manifest_path)) {
                throw IncompleteRunError("run directory lacks manifest.json: " + qa_run);
            }
            RunConfig cfg = run_config_from_manifest(read_file(manifest_path));
            if (!qa_generator.empty()) cfg.generator = qa_generator;
            if (!qa_endpoint.empty()) cfg.endpoint = qa_endpoint;
            QaResult qa = run_downstream_qa(cfg, qa_run);
            std::cout << "eligible " << qa.eligible << ", excluded " << qa.excluded
                      << ", correct " << qa.correct << "\n"
                      << "acc " << json(qa.accuracy).dump() << "\n";
            return 0;
        }

        if (*rt_cmd) return cmd_reward_trace(rt_run, rt_iteration);
        if (*report_cmd) return cmd_report(report_runs, report_format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
