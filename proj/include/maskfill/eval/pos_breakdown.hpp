#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "maskfill/engine/attack.hpp"
#include "maskfill/models/interfaces.hpp"

namespace maskfill::eval {

// Tag tallies over the applied actions of successful attacks, computed on
// the original texts. Replace tallies the replaced token's tag; insert the
// (left, right) tag pair around the insertion point ("-" past the text
// end); merge the merged bigram's tag pair.
struct PosBreakdown {
    std::map<std::string, std::size_t> replace_by_tag;
    std::map<std::string, std::size_t> insert_by_context;
    std::map<std::string, std::size_t> merge_by_bigram;

    std::size_t replace_total = 0;
    std::size_t insert_total = 0;
    std::size_t merge_total = 0;
};

PosBreakdown pos_breakdown(const std::vector<engine::AttackResult>& results,
                           const models::PosTagger& tagger);

// Per-kind percentage tables, largest share first.
void print_pos_breakdown(std::ostream& out, const PosBreakdown& breakdown);

} // namespace maskfill::eval
