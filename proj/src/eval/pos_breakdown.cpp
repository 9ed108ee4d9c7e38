#include "maskfill/eval/pos_breakdown.hpp"

#include <algorithm>
#include <iomanip>

namespace maskfill::eval {

using models::EditKind;
using models::PosTag;

PosBreakdown pos_breakdown(const std::vector<engine::AttackResult>& results,
                           const models::PosTagger& tagger) {
    PosBreakdown out;
    for (const auto& r : results) {
        if (!r.success) continue;
        std::vector<PosTag> tags = tagger.tag(r.original);
        auto tag_name = [&](std::size_t i) -> std::string {
            return i < tags.size() ? std::string(models::to_string(tags[i])) : std::string("-");
        };
        for (const auto& a : r.applied) {
            switch (a.kind) {
                case EditKind::Replace:
                    ++out.replace_by_tag[tag_name(a.orig_pos)];
                    ++out.replace_total;
                    break;
                case EditKind::Insert:
                    ++out.insert_by_context["(" + tag_name(a.orig_pos) + ", " +
                                            tag_name(a.orig_pos + 1) + ")"];
                    ++out.insert_total;
                    break;
                case EditKind::Merge:
                    ++out.merge_by_bigram[tag_name(a.orig_pos) + "-" + tag_name(a.orig_pos + 1)];
                    ++out.merge_total;
                    break;
            }
        }
    }
    return out;
}

namespace {

void print_table(std::ostream& out, const char* title,
                 const std::map<std::string, std::size_t>& table, std::size_t total) {
    out << title << " (" << total << " actions)\n";
    if (total == 0) return;
    std::vector<std::pair<std::string, std::size_t>> rows(table.begin(), table.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (const auto& [key, count] : rows) {
        double pct = 100.0 * static_cast<double>(count) / static_cast<double>(total);
        out << "  " << std::left << std::setw(16) << key << std::right << std::fixed
            << std::setprecision(1) << std::setw(6) << pct << "%\n";
    }
    out.unsetf(std::ios::fixed);
}

} // namespace

void print_pos_breakdown(std::ostream& out, const PosBreakdown& breakdown) {
    print_table(out, "replace by tag", breakdown.replace_by_tag, breakdown.replace_total);
    print_table(out, "insert by (left, right)", breakdown.insert_by_context, breakdown.insert_total);
    print_table(out, "merge by bigram", breakdown.merge_by_bigram, breakdown.merge_total);
}

} // namespace maskfill::eval
