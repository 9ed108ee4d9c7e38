#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "maskfill/engine/attack.hpp"
#include "maskfill/models/interfaces.hpp"

namespace maskfill::eval {

// Modified-token count of one attack trace: replace and insert count one
// each; merge counts one when the fill keeps either merged surface and two
// otherwise.
int modification_count(const engine::AttackResult& result);

// modification_count over the original token count; throws on an empty
// original.
double modification_rate(const engine::AttackResult& result);

// The attack-quality metric suite. a_rate is over non-skipped examples; the
// other four average over successful attacks only and are absent when there
// are none (a_rate itself is absent when every example was skipped).
struct MetricsReport {
    std::optional<double> a_rate;
    std::optional<double> mod_rate;
    std::optional<double> ppl;
    std::optional<double> gerr; // mean error-count increase; may be negative
    std::optional<double> sim;  // global (unwindowed) similarity
    std::size_t n_total = 0;
    std::size_t n_skipped = 0;
    std::size_t n_success = 0;
};

MetricsReport aggregate(const std::vector<engine::AttackResult>& results,
                        const models::PerplexityScorer* perplexity,
                        const models::GrammarChecker* grammar,
                        const models::SimilarityScorer* similarity);

nlohmann::json report_to_json(const MetricsReport& report);
MetricsReport report_from_json(const nlohmann::json& j);

} // namespace maskfill::eval
