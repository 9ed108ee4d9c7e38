#include "maskfill/eval/metrics.hpp"

#include <stdexcept>

namespace maskfill::eval {

using engine::AttackResult;
using models::EditKind;

int modification_count(const AttackResult& result) {
    int count = 0;
    for (const auto& action : result.applied) {
        switch (action.kind) {
            case EditKind::Replace:
            case EditKind::Insert:
                count += 1;
                break;
            case EditKind::Merge: {
                // The merged surfaces sit at the action's original anchor.
                const auto& toks = result.original.tokens;
                bool kept = false;
                if (action.orig_pos + 1 < toks.size()) {
                    kept = action.fill == toks[action.orig_pos].surface ||
                           action.fill == toks[action.orig_pos + 1].surface;
                }
                count += kept ? 1 : 2;
                break;
            }
        }
    }
    return count;
}

double modification_rate(const AttackResult& result) {
    if (result.original.empty()) {
        throw std::invalid_argument("modification_rate of an empty original text");
    }
    return static_cast<double>(modification_count(result)) /
           static_cast<double>(result.original.size());
}

MetricsReport aggregate(const std::vector<AttackResult>& results,
                        const models::PerplexityScorer* perplexity,
                        const models::GrammarChecker* grammar,
                        const models::SimilarityScorer* similarity) {
    MetricsReport report;
    report.n_total = results.size();

    double mod_sum = 0.0;
    double ppl_sum = 0.0;
    double gerr_sum = 0.0;
    double sim_sum = 0.0;
    std::size_t ppl_n = 0;
    std::size_t gerr_n = 0;
    std::size_t sim_n = 0;

    for (const AttackResult& r : results) {
        if (r.skipped) {
            ++report.n_skipped;
            continue;
        }
        if (!r.success) continue;
        ++report.n_success;
        mod_sum += modification_rate(r);
        if (perplexity != nullptr) {
            ppl_sum += perplexity->perplexity(r.adversarial);
            ++ppl_n;
        }
        if (grammar != nullptr) {
            gerr_sum += static_cast<double>(grammar->count_errors(r.adversarial) -
                                            grammar->count_errors(r.original));
            ++gerr_n;
        }
        if (similarity != nullptr) {
            sim_sum += similarity->score(r.original, r.adversarial);
            ++sim_n;
        }
    }

    std::size_t attempted = report.n_total - report.n_skipped;
    if (attempted > 0) {
        report.a_rate = static_cast<double>(report.n_success) / static_cast<double>(attempted);
    }
    if (report.n_success > 0) {
        report.mod_rate = mod_sum / static_cast<double>(report.n_success);
        if (ppl_n > 0) report.ppl = ppl_sum / static_cast<double>(ppl_n);
        if (gerr_n > 0) report.gerr = gerr_sum / static_cast<double>(gerr_n);
        if (sim_n > 0) report.sim = sim_sum / static_cast<double>(sim_n);
    }
    return report;
}

nlohmann::json report_to_json(const MetricsReport& report) {
    nlohmann::json j;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v.has_value()) {
            j[key] = *v;
        } else {
            j[key] = nullptr;
        }
    };
    put("a_rate", report.a_rate);
    put("mod_rate", report.mod_rate);
    put("ppl", report.ppl);
    put("gerr", report.gerr);
    put("sim", report.sim);
    j["n_total"] = report.n_total;
    j["n_skipped"] = report.n_skipped;
    j["n_success"] = report.n_success;
    return j;
}

MetricsReport report_from_json(const nlohmann::json& j) {
    MetricsReport report;
    auto get = [&](const char* key) -> std::optional<double> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<double>();
    };
    report.a_rate = get("a_rate");
    report.mod_rate = get("mod_rate");
    report.ppl = get("ppl");
    report.gerr = get("gerr");
    report.sim = get("sim");
    report.n_total = j.at("n_total").get<std::size_t>();
    report.n_skipped = j.at("n_skipped").get<std::size_t>();
    report.n_success = j.at("n_success").get<std::size_t>();
    return report;
}

} // namespace maskfill::eval
