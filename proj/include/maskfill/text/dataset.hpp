#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maskfill/text/token.hpp"

namespace maskfill::text {

enum class TaskKind { SingleText, TextPair };

struct LabeledExample {
    TokenizedText text_a;
    std::optional<TokenizedText> text_b;
    std::string gold_label;
};

struct Dataset {
    std::vector<LabeledExample> examples;
    std::vector<std::string> label_set; // duplicate-free, first-seen order
    TaskKind task_kind = TaskKind::SingleText;

    std::size_t size() const { return examples.size(); }
};

enum class DatasetFormat { Jsonl, Tsv };

// Field-name mapping for loaders. An empty text_b_field means single-text.
// When fixed_labels is non-empty, records with labels outside it are errors;
// otherwise the label set is inferred in first-seen order.
struct DatasetSchema {
    std::string text_field = "text";
    std::string text_b_field;
    std::string label_field = "label";
    std::vector<std::string> fixed_labels;
};

// Throws std::runtime_error naming the path or the offending line number.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const DatasetSchema& schema = {});

// Which text of a pair example gets attacked, and which of its positions are
// off limits: the longer text is the target (ties go to text_a) and every
// position whose lowercased surface also occurs in the other text is frozen.
struct AttackTarget {
    bool use_text_b = false;
    std::set<std::size_t> frozen;
};

// Pair examples only; throws std::invalid_argument for single-text input.
AttackTarget select_attack_target(const LabeledExample& example);

// The text an attack on this example would perturb.
const TokenizedText& attacked_text(const LabeledExample& example);

// Evaluation-protocol defaults: 1000 sampled instances of length <= 100.
inline constexpr std::size_t kEvalSampleDefault = 1000;
inline constexpr std::size_t kEvalMaxLenDefault = 100;

// Keeps examples whose attacked text has at most max_len tokens, then draws
// min(n, remaining) of them without replacement. Deterministic in seed; the
// sampled examples keep their original relative order.
Dataset sample_eval_subset(const Dataset& dataset, std::size_t n = kEvalSampleDefault,
                           std::size_t max_len = kEvalMaxLenDefault, std::uint64_t seed = 0);

} // namespace maskfill::text
