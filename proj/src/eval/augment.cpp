#include "maskfill/eval/augment.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace maskfill::eval {

using text::Dataset;
using text::LabeledExample;
using text::TokenizedText;

namespace {

LabeledExample adversarial_example(const Dataset& train, const engine::AttackResult& r) {
    if (r.example_index >= train.examples.size()) {
        throw std::out_of_range("attack result indexes outside the training set");
    }
    LabeledExample ex = train.examples[r.example_index];
    TokenizedText adv = r.adversarial;
    adv.frozen.clear(); // frozen flags are attack-time metadata
    if (r.attacked_text_b) {
        ex.text_b = std::move(adv);
    } else {
        ex.text_a = std::move(adv);
    }
    ex.gold_label = r.gold_label;
    return ex;
}

} // namespace

Dataset augment_dataset(const Dataset& train, const std::vector<engine::AttackResult>& results) {
    Dataset out = train;
    for (const auto& r : results) {
        if (!r.success) continue;
        out.examples.push_back(adversarial_example(train, r));
    }
    return out;
}

void export_augmented(const std::filesystem::path& path, const Dataset& train,
                      const std::vector<engine::AttackResult>& results,
                      const text::DatasetSchema& schema) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write augmented dataset: " + path.string());

    auto write_example = [&](const LabeledExample& ex, bool adversarial) {
        nlohmann::json j;
        j[schema.text_field] = text::detokenize(ex.text_a);
        if (ex.text_b.has_value() && !schema.text_b_field.empty()) {
            j[schema.text_b_field] = text::detokenize(*ex.text_b);
        }
        j[schema.label_field] = ex.gold_label;
        j["adversarial"] = adversarial;
        out << j.dump() << "\n";
    };

    for (const auto& ex : train.examples) write_example(ex, false);
    for (const auto& r : results) {
        if (!r.success) continue;
        write_example(adversarial_example(train, r), true);
    }
    if (!out) throw std::runtime_error("failed writing augmented dataset: " + path.string());
}

} // namespace maskfill::eval
