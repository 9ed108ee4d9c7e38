#pragma once

#include <filesystem>
#include <vector>

#include "maskfill/engine/attack.hpp"
#include "maskfill/text/dataset.hpp"

namespace maskfill::eval {

// The training set plus one extra example per successful attack: the
// adversarial text carrying the ORIGINAL gold label (for pair tasks the
// untouched companion text is kept). Results must index into `train`.
text::Dataset augment_dataset(const text::Dataset& train,
                              const std::vector<engine::AttackResult>& results);

// Writes the augmented set as jsonl using the schema's field names plus a
// boolean "adversarial" field (false on the originals).
void export_augmented(const std::filesystem::path& path, const text::Dataset& train,
                      const std::vector<engine::AttackResult>& results,
                      const text::DatasetSchema& schema = {});

} // namespace maskfill::eval
