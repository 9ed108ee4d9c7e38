#include "maskfill/models/types.hpp"

#include <stdexcept>

namespace maskfill::models {

std::string argmax_label(const LabelDistribution& dist, std::span<const std::string> preference) {
    if (dist.probs.empty()) throw std::invalid_argument("argmax_label on empty distribution");
    if (!preference.empty()) {
        const std::string* best = nullptr;
        double best_p = -1.0;
        for (const auto& label : preference) {
            double p = dist.prob(label);
            if (best == nullptr || p > best_p) {
                best = &label;
                best_p = p;
            }
        }
        // Labels outside the preference order still participate.
        for (const auto& [label, p] : dist.probs) {
            if (p > best_p) {
                best = &label;
                best_p = p;
            }
        }
        return *best;
    }
    const std::string* best = nullptr;
    double best_p = -1.0;
    for (const auto& [label, p] : dist.probs) {
        if (best == nullptr || p > best_p) {
            best = &label;
            best_p = p;
        }
    }
    return *best;
}

std::string_view to_string(EditKind kind) {
    switch (kind) {
        case EditKind::Replace: return "replace";
        case EditKind::Insert: return "insert";
        case EditKind::Merge: return "merge";
    }
    return "replace";
}

EditKind edit_kind_from_string(std::string_view name) {
    if (name == "replace") return EditKind::Replace;
    if (name == "insert") return EditKind::Insert;
    if (name == "merge") return EditKind::Merge;
    throw std::invalid_argument("unknown edit kind: '" + std::string(name) + "'");
}

std::string_view to_string(PosTag tag) {
    switch (tag) {
        case PosTag::Noun: return "NOUN";
        case PosTag::Verb: return "VERB";
        case PosTag::Adj: return "ADJ";
        case PosTag::Adv: return "ADV";
        case PosTag::Dt: return "DT";
        case PosTag::Pron: return "PRON";
        case PosTag::Prep: return "PREP";
        case PosTag::Num: return "NUM";
        case PosTag::Punct: return "PUNCT";
        case PosTag::Other: return "OTHER";
    }
    return "OTHER";
}

PosTag pos_tag_from_string(std::string_view name) {
    if (name == "NOUN") return PosTag::Noun;
    if (name == "VERB") return PosTag::Verb;
    if (name == "ADJ") return PosTag::Adj;
    if (name == "ADV") return PosTag::Adv;
    if (name == "DT") return PosTag::Dt;
    if (name == "PRON") return PosTag::Pron;
    if (name == "PREP") return PosTag::Prep;
    if (name == "NUM") return PosTag::Num;
    if (name == "PUNCT") return PosTag::Punct;
    if (name == "OTHER") return PosTag::Other;
    throw std::invalid_argument("unknown pos tag: '" + std::string(name) + "'");
}

} // namespace maskfill::models
