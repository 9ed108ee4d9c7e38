#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maskfill/text/token.hpp"

namespace maskfill::models {

// Distribution over class labels; probabilities sum to 1 within 1e-6.
struct LabelDistribution {
    std::map<std::string, double> probs;

    double prob(const std::string& label) const {
        auto it = probs.find(label);
        return it == probs.end() ? 0.0 : it->second;
    }
};

// Highest-probability label. Ties go to the label appearing first in
// `preference` when given, else to the lexicographically smaller one.
std::string argmax_label(const LabelDistribution& dist, std::span<const std::string> preference = {});

// Distribution over a masked-language-model vocabulary.
struct VocabDistribution {
    std::map<std::string, double> probs;
};

enum class EditKind { Replace, Insert, Merge };

std::string_view to_string(EditKind kind);
EditKind edit_kind_from_string(std::string_view name);

// A text with one mask in it: the unmasked left/right context, which edit
// produced the mask, where it sits in the source text, and which surfaces
// the mask swallowed (none for insert, one for replace, two for merge).
struct MaskedContext {
    std::vector<text::Token> left;
    std::vector<text::Token> right;
    EditKind kind = EditKind::Replace;
    std::size_t origin_position = 0;
    std::vector<std::string> replaced_surfaces;
};

enum class PosTag { Noun, Verb, Adj, Adv, Dt, Pron, Prep, Num, Punct, Other };

std::string_view to_string(PosTag tag);
PosTag pos_tag_from_string(std::string_view name);

struct ModelEndpoint {
    std::string base_url;
    std::chrono::milliseconds timeout{2000};
    int retries = 2;
    std::chrono::milliseconds backoff{50};
};

} // namespace maskfill::models
