#include "maskfill/engine/trace.hpp"

#include <fstream>

namespace maskfill::engine {

namespace {

nlohmann::json text_to_json(const text::TokenizedText& t) {
    nlohmann::json j;
    j["tokens"] = t.surfaces();
    j["frozen"] = std::vector<std::size_t>(t.frozen.begin(), t.frozen.end());
    return j;
}

text::TokenizedText text_from_json(const nlohmann::json& j) {
    text::TokenizedText t = text::from_surfaces(j.at("tokens").get<std::vector<std::string>>());
    for (std::size_t f : j.at("frozen").get<std::vector<std::size_t>>()) t.frozen.insert(f);
    return t;
}

} // namespace

nlohmann::json result_to_json(const AttackResult& result) {
    nlohmann::json j;
    j["example_index"] = result.example_index;
    j["skipped"] = result.skipped;
    j["success"] = result.success;
    if (!result.error.empty()) j["error"] = result.error;
    j["attacked_text_b"] = result.attacked_text_b;
    j["gold_label"] = result.gold_label;
    j["final_label"] = result.final_label;
    j["initial_gold_prob"] = result.initial_gold_prob;
    j["final_gold_prob"] = result.final_gold_prob;
    j["steps"] = result.steps;
    j["original"] = text_to_json(result.original);
    j["adversarial"] = text_to_json(result.adversarial);
    nlohmann::json applied = nlohmann::json::array();
    for (const AppliedAction& a : result.applied) {
        applied.push_back({{"kind", std::string(models::to_string(a.kind))},
                           {"orig_pos", a.orig_pos},
                           {"live_pos", a.live_pos},
                           {"fill", a.fill},
                           {"score", a.score}});
    }
    j["applied"] = applied;
    nlohmann::json probs = nlohmann::json::array();
    for (const AppliedAction& a : result.applied) probs.push_back(a.gold_prob_after);
    j["step_gold_probs"] = probs;
    return j;
}

AttackResult result_from_json(const nlohmann::json& j) {
    AttackResult r;
    r.example_index = j.at("example_index").get<std::size_t>();
    r.skipped = j.at("skipped").get<bool>();
    r.success = j.at("success").get<bool>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    r.attacked_text_b = j.at("attacked_text_b").get<bool>();
    r.gold_label = j.at("gold_label").get<std::string>();
    r.final_label = j.at("final_label").get<std::string>();
    r.initial_gold_prob = j.at("initial_gold_prob").get<double>();
    r.final_gold_prob = j.at("final_gold_prob").get<double>();
    r.steps = j.at("steps").get<std::size_t>();
    r.original = text_from_json(j.at("original"));
    r.adversarial = text_from_json(j.at("adversarial"));
    const auto& probs = j.at("step_gold_probs");
    std::size_t idx = 0;
    for (const auto& a : j.at("applied")) {
        AppliedAction act;
        act.kind = models::edit_kind_from_string(a.at("kind").get<std::string>());
        act.orig_pos = a.at("orig_pos").get<std::size_t>();
        act.live_pos = a.at("live_pos").get<std::size_t>();
        act.fill = a.at("fill").get<std::string>();
        act.score = a.at("score").get<double>();
        if (idx < probs.size()) act.gold_prob_after = probs.at(idx).get<double>();
        ++idx;
        r.applied.push_back(std::move(act));
    }
    return r;
}

void write_trace(const std::filesystem::path& path, const std::vector<AttackResult>& results) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path.string());
    for (const AttackResult& r : results) {
        out << result_to_json(r).dump() << "\n";
    }
    if (!out) throw std::runtime_error("failed writing trace file: " + path.string());
}

std::vector<AttackResult> read_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file: " + path.string());
    std::vector<AttackResult> results;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw std::runtime_error(path.string() + ": line " + std::to_string(line_no) +
                                     ": malformed JSON");
        }
        results.push_back(result_from_json(j));
    }
    return results;
}

} // namespace maskfill::engine
