#include "maskfill/engine/attack.hpp"

#include <algorithm>
#include <stdexcept>

#include "maskfill/perturb/candidates.hpp"
#include "maskfill/perturb/mask.hpp"
#include "maskfill/util/parallel.hpp"

namespace maskfill::engine {

using models::EditKind;
using models::PosTag;
using text::TokenizedText;

namespace {

int kind_rank(EditKind kind) {
    switch (kind) {
        case EditKind::Replace: return 0;
        case EditKind::Insert: return 1;
        case EditKind::Merge: return 2;
    }
    return 0;
}

// Higher score wins; ties prefer replace over insert over merge, then the
// lower original position.
bool beats(const PoolAction& a, const PoolAction& b) {
    if (a.score != b.score) return a.score > b.score;
    if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) < kind_rank(b.kind);
    return a.orig_pos < b.orig_pos;
}

bool np_pattern(PosTag first, PosTag second) {
    if (second != PosTag::Noun) return false;
    return first == PosTag::Adj || first == PosTag::Noun || first == PosTag::Dt;
}

} // namespace

bool np_gate(const TokenizedText& x, std::size_t i, const models::PosTagger& tagger) {
    if (i + 1 >= x.size()) return false;
    std::vector<PosTag> tags = tagger.tag(x);
    return np_pattern(tags[i], tags[i + 1]);
}

std::vector<PoolAction> build_action_pool(const TokenizedText& x, const std::string& gold_label,
                                          const models::ModelSet& models, const AttackConfig& config,
                                          const TokenizedText* paired) {
    config.validate();
    const std::size_t n = x.size();
    const perturb::CandidateFilterConfig filter = config.filter_config();

    std::vector<PosTag> tags;
    bool want_merge = config.enabled_actions.count(EditKind::Merge) != 0;
    if (want_merge && config.np_gate) tags = models.pos->tag(x);

    auto attackable = [&](std::size_t i) {
        if (x.frozen_at(i)) return false;
        if (!config.attack_punct && x.tokens[i].is_punct) return false;
        return true;
    };

    std::vector<PoolAction> pool;
    for (std::size_t i = 0; i < n; ++i) {
        if (!attackable(i)) continue;

        std::optional<PoolAction> best;
        auto consider = [&](EditKind kind) {
            models::MaskedContext ctx;
            switch (kind) {
                case EditKind::Replace: ctx = perturb::mask_replace(x, i); break;
                case EditKind::Insert: ctx = perturb::mask_insert(x, i); break;
                case EditKind::Merge: ctx = perturb::mask_merge(x, i); break;
            }
            perturb::CandidateSet candidates =
                perturb::build_candidate_set(ctx, x, *models.mlm, *models.similarity, filter);
            std::optional<perturb::FillChoice> fill =
                perturb::select_fill(candidates, x, gold_label, *models.victim, paired);
            if (!fill.has_value()) return; // empty candidate set: perturbation not considered
            PoolAction action;
            action.kind = kind;
            action.orig_pos = i;
            action.live_pos = i;
            action.fill = fill->token;
            action.gold_prob = fill->gold_prob;
            action.score = -fill->gold_prob;
            action.mlm_prob = fill->mlm_prob;
            if (!best.has_value() || beats(action, *best)) best = std::move(action);
        };

        if (config.enabled_actions.count(EditKind::Replace)) consider(EditKind::Replace);
        if (config.enabled_actions.count(EditKind::Insert)) consider(EditKind::Insert);
        if (want_merge && i + 1 < n && attackable(i + 1) &&
            (!config.np_gate || np_pattern(tags[i], tags[i + 1]))) {
            consider(EditKind::Merge);
        }

        if (best.has_value()) pool.push_back(std::move(*best));
    }
    return pool;
}

void reindex_pool(std::vector<PoolAction>& pool, const PoolAction& applied) {
    const std::size_t p = applied.live_pos;
    switch (applied.kind) {
        case EditKind::Replace:
            break;
        case EditKind::Insert:
            for (PoolAction& a : pool) {
                if (a.live_pos > p) ++a.live_pos;
            }
            break;
        case EditKind::Merge: {
            std::erase_if(pool, [&](const PoolAction& a) {
                return a.live_pos == p || a.live_pos == p + 1;
            });
            for (PoolAction& a : pool) {
                if (a.live_pos > p + 1) --a.live_pos;
            }
            break;
        }
    }
}

AttackResult attack(const text::LabeledExample& example, std::size_t example_index,
                    const models::ModelSet& models, const AttackConfig& config) {
    config.validate();

    AttackResult result;
    result.example_index = example_index;
    result.gold_label = example.gold_label;

    // Pair tasks attack the longer text with shared tokens frozen; the
    // untouched companion still goes to the victim on every query.
    TokenizedText target;
    const TokenizedText* paired = nullptr;
    if (example.text_b.has_value()) {
        text::AttackTarget selection = text::select_attack_target(example);
        result.attacked_text_b = selection.use_text_b;
        target = selection.use_text_b ? *example.text_b : example.text_a;
        target.frozen.insert(selection.frozen.begin(), selection.frozen.end());
        paired = selection.use_text_b ? &example.text_a : &*example.text_b;
    } else {
        target = example.text_a;
    }
    result.original = target;
    result.adversarial = target;

    models::LabelDistribution initial = models.victim->predict(target, paired);
    std::vector<std::string> label_order = models.victim->labels();
    result.initial_gold_prob = initial.prob(example.gold_label);
    result.final_gold_prob = result.initial_gold_prob;
    result.final_label = models::argmax_label(initial, label_order);
    if (result.final_label != example.gold_label) {
        result.skipped = true;
        return result;
    }

    std::vector<PoolAction> pool =
        build_action_pool(target, example.gold_label, models, config, paired);

    TokenizedText current = target;
    const std::size_t budget = config.effective_max_steps(target.size());
    for (std::size_t step = 1; step <= budget && !pool.empty(); ++step) {
        auto best_it = pool.begin();
        for (auto it = std::next(pool.begin()); it != pool.end(); ++it) {
            if (beats(*it, *best_it)) best_it = it;
        }
        PoolAction chosen = *best_it;
        pool.erase(best_it);

        current = perturb::apply_edit(current, chosen.kind, chosen.live_pos, chosen.fill);
        reindex_pool(pool, chosen);

        models::LabelDistribution dist = models.victim->predict(current, paired);
        double gold_prob = dist.prob(example.gold_label);
        std::string label = models::argmax_label(dist, label_order);

        result.applied.push_back(AppliedAction{chosen.kind, chosen.orig_pos, chosen.live_pos,
                                               chosen.fill, chosen.score, gold_prob});
        result.steps = step;
        result.adversarial = current;
        result.final_gold_prob = gold_prob;
        result.final_label = label;

        if (label != example.gold_label) {
            result.success = true;
            return result;
        }
    }
    return result;
}

std::vector<AttackResult> attack_dataset(const text::Dataset& dataset, const models::ModelSet& models,
                                         const AttackConfig& config, std::size_t workers) {
    std::vector<AttackResult> results(dataset.examples.size());
    util::parallel_for(dataset.examples.size(), std::max<std::size_t>(1, workers), [&](std::size_t i) {
        try {
            results[i] = attack(dataset.examples[i], i, models, config);
        } catch (const std::exception& e) {
            AttackResult failed;
            failed.example_index = i;
            failed.gold_label = dataset.examples[i].gold_label;
            failed.error = e.what();
            results[i] = std::move(failed);
        }
    });
    return results;
}

} // namespace maskfill::engine
