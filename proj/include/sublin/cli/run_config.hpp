#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sublin/pipelines.hpp"

namespace sublin::cli {

// What `estimate` and `sweep` run: a plain pipeline, the dichotomy runner over
// the pipeline for `mode`, or the matrix pipeline with the exact plug-in.
enum class Task { Pipeline, Dichotomy, Plugin };

struct RunConfig {
    Task task = Task::Pipeline;
    Mode mode = Mode::Matrix;  // access model; "mode=dichotomy" keeps it and sets task
    PipelineConfig pipeline;
    std::string instance = "erdos-renyi:n=200,p=0.05";  // generator spec; "$n" is replaced in sweeps
    std::string graph_file;                             // used instead of `instance` when set
    ListOrder list_order = ListOrder::PerVertexRandom;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds{1};
    bool verify = false;
    std::size_t exact_cap = 2000;
    std::string json_out;
    std::string csv_out;
    std::string graph_out;
    bool inject_fault = false;
};

// "matrix", "list", "hybrid", "dichotomy" or "plugin".
std::string mode_name(const RunConfig& cfg);

// Keys accepted in config files and by apply_setting.
const std::vector<std::string>& config_keys();

// Throws UsageError on unknown keys or malformed values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// key=value lines; blank lines and '#' comments allowed.
void load_config_file(RunConfig& cfg, const std::string& path);

// Default seed from SUBLIN_SEED, if set.
void apply_environment(RunConfig& cfg);

std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::vector<std::size_t> parse_size_list(const std::string& text);

}  // namespace sublin::cli
