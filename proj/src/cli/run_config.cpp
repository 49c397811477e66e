#include "sublin/cli/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sublin::cli {

namespace {

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument("");
        return x;
    } catch (const std::logic_error&) {
        throw UsageError("bad number for " + key + ": '" + v + "'");
    }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    try {
        if (v.empty() || v[0] == '-') throw std::invalid_argument("");
        std::size_t pos = 0;
        auto x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::logic_error&) {
        throw UsageError("bad non-negative integer for " + key + ": '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw UsageError("bad boolean for " + key + ": '" + v + "'");
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "mode",    "access",     "epsilon",    "gamma",     "gamma_c",  "c_beta",  "beta",      "scale",
        "estimator_scale", "seed", "seeds",  "instance", "graph",   "list_order", "sizes",
        "verify",  "exact_cap",  "node_cap",  "fallback", "memo",    "json",      "csv"};
    return keys;
}

std::string mode_name(const RunConfig& cfg) {
    switch (cfg.task) {
        case Task::Dichotomy: return "dichotomy";
        case Task::Plugin: return "plugin";
        case Task::Pipeline: break;
    }
    return to_string(cfg.mode);
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& s : split(text)) out.push_back(to_u64("seeds", s));
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& s : split(text)) out.push_back(static_cast<std::size_t>(to_u64("sizes", s)));
    return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto& p = cfg.pipeline;
    if (key == "mode") {
        if (value == "dichotomy") cfg.task = Task::Dichotomy;
        else if (value == "plugin") cfg.task = Task::Plugin;
        else {
            cfg.task = Task::Pipeline;
            cfg.mode = parse_mode(value);
        }
    } else if (key == "access") cfg.mode = parse_mode(value);
    else if (key == "epsilon") p.epsilon = to_double(key, value);
    else if (key == "gamma") p.gamma = to_double(key, value);
    else if (key == "gamma_c") p.gamma_c = to_double(key, value);
    else if (key == "c_beta") p.c_beta = to_double(key, value);
    else if (key == "beta") p.beta = static_cast<std::uint32_t>(to_u64(key, value));
    else if (key == "scale") p.scale = to_double(key, value);
    else if (key == "estimator_scale") p.estimator_scale = to_double(key, value);
    else if (key == "seed") cfg.seeds = {to_u64(key, value)};
    else if (key == "seeds") cfg.seeds = parse_seed_list(value);
    else if (key == "instance") cfg.instance = value;
    else if (key == "graph") cfg.graph_file = value;
    else if (key == "list_order") {
        if (value == "random") cfg.list_order = ListOrder::PerVertexRandom;
        else if (value == "global") cfg.list_order = ListOrder::Global;
        else throw UsageError("list_order must be random or global");
    } else if (key == "sizes") cfg.sizes = parse_size_list(value);
    else if (key == "verify") cfg.verify = to_bool(key, value);
    else if (key == "exact_cap") cfg.exact_cap = static_cast<std::size_t>(to_u64(key, value));
    else if (key == "node_cap") p.oracle.node_cap = to_u64(key, value);
    else if (key == "fallback") p.oracle.component_fallback = to_bool(key, value);
    else if (key == "memo") {
        if (value == "run") p.oracle.memo = MemoScope::Run;
        else if (value == "query") p.oracle.memo = MemoScope::Query;
        else throw UsageError("memo must be run or query");
    } else if (key == "json") cfg.json_out = value;
    else if (key == "csv") cfg.csv_out = value;
    else throw UsageError("unknown config key: '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void apply_environment(RunConfig& cfg) {
    if (const char* s = std::getenv("SUBLIN_SEED"); s && *s) cfg.seeds = {to_u64("SUBLIN_SEED", s)};
}

}  // namespace sublin::cli
