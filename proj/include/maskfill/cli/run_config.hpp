#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "maskfill/engine/config.hpp"
#include "maskfill/models/interfaces.hpp"
#include "maskfill/text/dataset.hpp"

namespace maskfill::cli {

// Config file problems; the message lists every offending key at once.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed contents of a run config file: flat "key = value" lines, full-line
// # comments, unknown keys rejected. See the README for the schema.
struct RunConfig {
    // dataset
    std::string dataset;
    text::DatasetFormat dataset_format = text::DatasetFormat::Jsonl;
    text::DatasetSchema schema;
    std::size_t sample_n = 0; // 0 = whole dataset
    std::size_t sample_max_len = 100;

    // model sources: a local path or a remote URL per role
    std::string victim_model;
    std::string victim_url;
    std::string mlm_model;
    std::string mlm_url;
    std::string vectors;
    std::string similarity_url;
    std::string perplexity_url;
    std::string grammar_url;
    std::string pos_url;
    int timeout_ms = 2000;
    int retries = 2;

    engine::AttackConfig attack;
    std::size_t workers = 1;

    std::string out_trace = "trace.jsonl";
    std::string out_metrics = "metrics.json";
    std::string out_csv = "sweep.csv";
    std::string out_augmented = "augmented.jsonl";

    static RunConfig load(const std::filesystem::path& path);

    // Builds the full model stack. Local roles come from the configured
    // files (similarity falls back to token-set overlap without a vector
    // file; perplexity shares the local language model; grammar and pos use
    // the built-in implementations). Throws ConfigError when a required
    // source is missing.
    models::ModelSet build_models() const;

    // Loads the configured dataset and applies sample_n/sample_max_len.
    text::Dataset load_configured_dataset() const;
};

} // namespace maskfill::cli
