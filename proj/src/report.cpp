#include "eraser/report.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"

namespace fs = std::filesystem;

namespace eraser {

namespace {

bool read_number(const json& j, const char* key, double& out) {
    if (!j.contains(key) || j.at(key).is_null()) return false;
    out = j.at(key).get<double>();
    return true;
}

std::string cell(bool present, double value) {
    return present ? json(value).dump() : std::string("-");
}

}  // namespace

RunSummary load_run_summary(const std::string& run_dir) {
    const std::string agg_path = (fs::path(run_dir) / "aggregate.json").string();
    if (!fs::exists(agg_path)) {
        throw IncompleteRunError("missing aggregate.json in " + run_dir);
    }
    json agg = json::parse(read_file(agg_path));

    RunSummary s;
    s.run_dir = run_dir;
    s.rewriter = agg.value("rewriter", "?");
    s.has_r_pri = read_number(agg, "mean_r_pri", s.r_pri);
    s.has_r_pub = read_number(agg, "mean_r_pub", s.r_pub);
    s.has_r_connect = read_number(agg, "r_connect", s.r_connect);
    s.has_reward = read_number(agg, "mean_reward", s.reward);
    read_number(agg, "mean_latency_secs", s.mean_latency_secs);

    const std::string qa_path = (fs::path(run_dir) / "qa.json").string();
    if (fs::exists(qa_path)) {
        json qa = json::parse(read_file(qa_path));
        s.has_acc = read_number(qa, "acc", s.acc);
    }
    return s;
}

std::string render_table(const std::vector<RunSummary>& runs) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"run", "rewriter", "r_pri", "r_pub", "r_connect", "reward", "acc",
                    "mean_latency_secs"});
    for (const RunSummary& s : runs) {
        rows.push_back({s.run_dir, s.rewriter, cell(s.has_r_pri, s.r_pri),
                        cell(s.has_r_pub, s.r_pub), cell(s.has_r_connect, s.r_connect),
                        cell(s.has_reward, s.reward), cell(s.has_acc, s.acc),
                        json(s.mean_latency_secs).dump()});
    }

    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(widths[c] - row[c].size() + 2, ' ');
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const std::vector<RunSummary>& runs) {
    json arr = json::array();
    for (const RunSummary& s : runs) {
        json row{{"run", s.run_dir},
                 {"rewriter", s.rewriter},
                 {"r_pri", s.has_r_pri ? json(s.r_pri) : json(nullptr)},
                 {"r_pub", s.has_r_pub ? json(s.r_pub) : json(nullptr)},
                 {"r_connect", s.has_r_connect ? json(s.r_connect) : json(nullptr)},
                 {"reward", s.has_reward ? json(s.reward) : json(nullptr)},
                 {"acc", s.has_acc ? json(s.acc) : json(nullptr)},
                 {"mean_latency_secs", s.mean_latency_secs}};
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

}  // namespace eraser
