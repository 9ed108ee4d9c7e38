#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "maskfill/engine/attack.hpp"

namespace maskfill::engine {

// jsonl trace format: one result object per line, applied actions as
// {kind, orig_pos, live_pos, fill, score}.
nlohmann::json result_to_json(const AttackResult& result);
AttackResult result_from_json(const nlohmann::json& j);

void write_trace(const std::filesystem::path& path, const std::vector<AttackResult>& results);
std::vector<AttackResult> read_trace(const std::filesystem::path& path);

} // namespace maskfill::engine
