#include "maskfill/perturb/candidates.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>

#include "maskfill/perturb/action.hpp"
#include "maskfill/util/hash.hpp"

namespace maskfill::perturb {

using models::EditKind;
using models::MaskedContext;
using models::VocabDistribution;
using text::TokenizedText;

namespace {

bool valid_fill_surface(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (std::isspace(c)) return false;
    }
    return true;
}

// Stable per-context stream so the w/o-MLM draw does not depend on worker
// scheduling: mixes the run seed with the edit kind, position and context.
std::uint64_t context_seed(const MaskedContext& ctx, std::uint64_t seed) {
    std::uint64_t h = util::mix(seed, static_cast<std::uint64_t>(ctx.kind));
    h = util::mix(h, ctx.origin_position);
    for (const auto& t : ctx.left) h = util::mix(h, util::fnv1a(t.surface));
    h = util::mix(h, 0x5efull);
    for (const auto& t : ctx.right) h = util::mix(h, util::fnv1a(t.surface));
    return h;
}

} // namespace

CandidateSet build_candidate_set(const MaskedContext& ctx, const TokenizedText& x,
                                 const models::MaskedLanguageModel& mlm,
                                 const models::SimilarityScorer& similarity,
                                 const CandidateFilterConfig& config) {
    CandidateSet out;
    out.ctx = ctx;

    VocabDistribution dist = mlm.predict(ctx);

    const std::string* original_surface =
        ctx.kind == EditKind::Replace && !ctx.replaced_surfaces.empty() ? &ctx.replaced_surfaces[0]
                                                                        : nullptr;

    std::vector<Candidate> pre_filter;
    if (config.disable_mlm_filter) {
        std::vector<const std::pair<const std::string, double>*> vocab;
        vocab.reserve(dist.probs.size());
        for (const auto& entry : dist.probs) vocab.push_back(&entry);
        std::mt19937_64 rng(context_seed(ctx, config.seed));
        std::size_t take = std::min(config.mlm_sample_size, vocab.size());
        for (std::size_t i = 0; i < take; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (vocab.size() - i));
            std::swap(vocab[i], vocab[j]);
        }
        vocab.resize(take);
        std::sort(vocab.begin(), vocab.end(),
                  [](const auto* a, const auto* b) { return a->first < b->first; });
        for (const auto* entry : vocab) {
            pre_filter.push_back(Candidate{entry->first, entry->second, 0.0});
        }
    } else {
        for (const auto& [token, p] : dist.probs) {
            if (p > config.mlm_threshold) pre_filter.push_back(Candidate{token, p, 0.0});
        }
    }

    for (Candidate& cand : pre_filter) {
        if (!valid_fill_surface(cand.token)) continue;
        if (original_surface != nullptr && cand.token == *original_surface) continue;
        if (config.disable_sim_filter) {
            cand.local_sim = std::numeric_limits<double>::quiet_NaN();
            out.members.push_back(std::move(cand));
            continue;
        }
        TokenizedText applied = apply_edit(x, ctx.kind, ctx.origin_position, cand.token);
        double sim = similarity.score(
            x, applied,
            models::SimilarityScorer::Window{config.window, ctx.origin_position});
        if (sim > config.sim_threshold) {
            cand.local_sim = sim;
            out.members.push_back(std::move(cand));
        }
    }
    return out;
}

std::optional<FillChoice> select_fill(const CandidateSet& candidates, const TokenizedText& x,
                                      const std::string& gold_label,
                                      const models::VictimClassifier& victim,
                                      const TokenizedText* paired) {
    if (candidates.empty()) return std::nullopt;

    std::optional<FillChoice> best;
    for (const Candidate& cand : candidates.members) {
        TokenizedText applied =
            apply_edit(x, candidates.ctx.kind, candidates.ctx.origin_position, cand.token);
        double gold_prob = victim.predict(applied, paired).prob(gold_label);
        bool better = false;
        if (!best.has_value()) {
            better = true;
        } else if (gold_prob != best->gold_prob) {
            better = gold_prob < best->gold_prob;
        } else if (cand.mlm_prob != best->mlm_prob) {
            better = cand.mlm_prob > best->mlm_prob;
        } else {
            better = cand.token < best->token;
        }
        if (better) best = FillChoice{cand.token, gold_prob, cand.mlm_prob};
    }
    return best;
}

} // namespace maskfill::perturb
