#pragma once

#include <string>
#include <vector>

#include "maskfill/engine/config.hpp"
#include "maskfill/models/interfaces.hpp"
#include "maskfill/perturb/action.hpp"
#include "maskfill/text/dataset.hpp"

namespace maskfill::engine {

// A pool entry: the best action found for one original-text position.
// live_pos tracks where the anchor currently sits as earlier edits shift
// the text; orig_pos never changes.
struct PoolAction {
    models::EditKind kind = models::EditKind::Replace;
    std::size_t orig_pos = 0;
    std::size_t live_pos = 0;
    std::string fill;
    double score = 0.0;       // -gold_prob, computed once against the original text
    double gold_prob = 0.0;
    double mlm_prob = 0.0;
};

struct AppliedAction {
    models::EditKind kind = models::EditKind::Replace;
    std::size_t orig_pos = 0;
    std::size_t live_pos = 0;
    std::string fill;
    double score = 0.0;
    double gold_prob_after = 0.0; // victim's gold prob on the text right after this step
};

struct AttackResult {
    bool skipped = false; // victim already misclassified the original
    bool success = false;
    std::string error; // non-empty when the attack aborted on a model error
    std::size_t example_index = 0;
    bool attacked_text_b = false;
    std::string gold_label;
    std::string final_label;
    double initial_gold_prob = 0.0;
    double final_gold_prob = 0.0;
    std::size_t steps = 0;
    text::TokenizedText original; // attacked text, frozen positions populated
    text::TokenizedText adversarial;
    std::vector<AppliedAction> applied;
};

// True when the bigram (i, i+1) matches one of the noun-phrase patterns
// merges are restricted to: ADJ-NOUN, NOUN-NOUN, DT-NOUN.
bool np_gate(const text::TokenizedText& x, std::size_t i, const models::PosTagger& tagger);

// Best action per attackable position, scored once against the original
// text: for each position the replace, insert and merge candidates are
// built independently and only the highest-scoring one is kept. Positions
// whose candidate sets are all empty contribute nothing.
std::vector<PoolAction> build_action_pool(const text::TokenizedText& x, const std::string& gold_label,
                                          const models::ModelSet& models, const AttackConfig& config,
                                          const text::TokenizedText* paired = nullptr);

// Applies one executed action's index shifts to the remaining pool: insert
// shifts later anchors right, merge drops anchors the merged bigram covered
// and shifts later ones left, replace shifts nothing.
void reindex_pool(std::vector<PoolAction>& pool, const PoolAction& applied);

// The greedy loop: pop the highest-scoring remaining action (ties:
// replace > insert > merge, then lower original position), apply it at its
// live position, and stop as soon as the victim's argmax leaves the gold
// label or the step budget runs out. Scores are never recomputed.
AttackResult attack(const text::LabeledExample& example, std::size_t example_index,
                    const models::ModelSet& models, const AttackConfig& config);

// One result per example, order-preserving. Per-example failures land in
// AttackResult::error instead of aborting the batch.
std::vector<AttackResult> attack_dataset(const text::Dataset& dataset, const models::ModelSet& models,
                                         const AttackConfig& config, std::size_t workers = 1);

} // namespace maskfill::engine
