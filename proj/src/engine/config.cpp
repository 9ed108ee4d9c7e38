#include "maskfill/engine/config.hpp"

#include <stdexcept>

namespace maskfill::engine {

std::size_t AttackConfig::effective_max_steps(std::size_t input_length) const {
    if (max_steps.has_value()) return *max_steps;
    return std::max<std::size_t>(1, (input_length + 9) / 10);
}

void AttackConfig::validate() const {
    if (max_steps.has_value() && *max_steps < 1) {
        throw std::invalid_argument("max_steps must be >= 1");
    }
    if (enabled_actions.empty()) {
        throw std::invalid_argument("enabled_actions must not be empty");
    }
    if (mlm_threshold < 0.0 || mlm_threshold > 1.0) {
        throw std::invalid_argument("mlm threshold k must be in [0,1]");
    }
    if (sim_threshold < 0.0 || sim_threshold > 1.0) {
        throw std::invalid_argument("similarity threshold l must be in [0,1]");
    }
    if (window < 1) throw std::invalid_argument("window must be >= 1");
}

perturb::CandidateFilterConfig AttackConfig::filter_config() const {
    perturb::CandidateFilterConfig fc;
    fc.mlm_threshold = mlm_threshold;
    fc.sim_threshold = sim_threshold;
    fc.window = window;
    fc.disable_sim_filter = disable_sim_filter;
    fc.disable_mlm_filter = disable_mlm_filter;
    fc.mlm_sample_size = mlm_sample_size;
    fc.seed = seed;
    return fc;
}

} // namespace maskfill::engine
