#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "maskfill/models/types.hpp"
#include "maskfill/perturb/candidates.hpp"

namespace maskfill::engine {

// Everything that parameterizes one attack run.
struct AttackConfig {
    double mlm_threshold = 5e-3; // k
    double sim_threshold = 0.7;  // l
    // Step budget T. Unset means 10% of the input length, rounded up.
    std::optional<std::size_t> max_steps;
    std::size_t window = 15;
    std::set<models::EditKind> enabled_actions = {models::EditKind::Replace,
                                                  models::EditKind::Insert,
                                                  models::EditKind::Merge};
    bool disable_sim_filter = false;
    bool disable_mlm_filter = false;
    std::size_t mlm_sample_size = 200;
    bool np_gate = true;      // merge only on noun-phrase bigrams
    bool attack_punct = true; // punctuation positions are attackable
    std::uint64_t seed = 0;

    std::size_t effective_max_steps(std::size_t input_length) const;
    // Throws std::invalid_argument on T < 1, empty enabled_actions, or
    // thresholds outside [0, 1].
    void validate() const;

    perturb::CandidateFilterConfig filter_config() const;
};

} // namespace maskfill::engine
