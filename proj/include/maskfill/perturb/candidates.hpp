#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maskfill/models/interfaces.hpp"
#include "maskfill/models/types.hpp"
#include "maskfill/text/token.hpp"

namespace maskfill::perturb {

// One surviving fill token with the two statistics it was filtered on.
// local_sim is NaN when the similarity filter was ablated away.
struct Candidate {
    std::string token;
    double mlm_prob = 0.0;
    double local_sim = 0.0;
};

struct CandidateSet {
    std::vector<Candidate> members; // duplicate-free, sorted by token
    models::MaskedContext ctx;

    bool empty() const { return members.empty(); }
};

// Thresholds and ablation switches for candidate construction. With
// disable_mlm_filter the probability threshold is replaced by a uniform
// draw of mlm_sample_size vocabulary tokens (without replacement), after
// which the similarity filter still applies unless itself disabled.
struct CandidateFilterConfig {
    double mlm_threshold = 5e-3; // k
    double sim_threshold = 0.7;  // l
    std::size_t window = 15;
    bool disable_sim_filter = false;
    bool disable_mlm_filter = false;
    std::size_t mlm_sample_size = 200;
    std::uint64_t seed = 0;
};

// Fills passing p_MLM > k and windowed similarity > l between the original
// text and the text with the fill applied. For replace contexts the original
// surface is excluded. The MLM filter runs first so the similarity pass only
// touches survivors. An empty set is a legal result.
CandidateSet build_candidate_set(const models::MaskedContext& ctx, const text::TokenizedText& x,
                                 const models::MaskedLanguageModel& mlm,
                                 const models::SimilarityScorer& similarity,
                                 const CandidateFilterConfig& config);

// The winning fill: the member minimizing the victim's gold-label
// probability on the fully applied text. Ties go to the higher MLM
// probability, then to the lexicographically smaller token.
struct FillChoice {
    std::string token;
    double gold_prob = 0.0;
    double mlm_prob = 0.0;
};

std::optional<FillChoice> select_fill(const CandidateSet& candidates, const text::TokenizedText& x,
                                      const std::string& gold_label,
                                      const models::VictimClassifier& victim,
                                      const text::TokenizedText* paired = nullptr);

} // namespace maskfill::perturb
