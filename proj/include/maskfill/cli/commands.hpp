#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "maskfill/text/dataset.hpp"

// Command implementations behind the maskfill binary. Exit codes: 0 on
// success with all outputs written and re-parsed cleanly, 2 for config,
// usage and input errors, 1 for runtime failures.
namespace maskfill::cli {

struct TrainVictimOptions {
    std::string train_path;
    std::string format = "jsonl"; // jsonl | tsv
    text::DatasetSchema schema;
    std::string out_path;
    double alpha = 1.0;
    std::string eval_path; // optional: print accuracy on this split
};

struct TrainMlmOptions {
    std::string corpus_path;
    std::string format = "raw"; // raw | jsonl | tsv
    text::DatasetSchema schema;
    std::string out_path;
    double delta = 0.1;
    int order = 3;
};

// Flag-level overrides; flags beat file values which beat defaults.
struct CommonOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<std::string> out;
};

int cmd_train_victim(const TrainVictimOptions& options);
int cmd_train_mlm(const TrainMlmOptions& options);
int cmd_attack(const std::string& config_path, const CommonOverrides& overrides = {});
int cmd_sweep(const std::string& config_path, const std::string& grid_spec,
              const CommonOverrides& overrides = {});
int cmd_augment(const std::string& config_path, const CommonOverrides& overrides = {});
// Prints the tag tallies; --out additionally writes them to a file.
int cmd_analyze_pos(const std::string& trace_path, const CommonOverrides& overrides = {});

} // namespace maskfill::cli
