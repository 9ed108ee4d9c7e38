#pragma once

#include <string>

#include "maskfill/models/interfaces.hpp"
#include "maskfill/models/types.hpp"
#include "maskfill/text/token.hpp"

namespace maskfill::perturb {

// A scored candidate edit. position indexes the ORIGINAL text; score is
// exactly -resulting_gold_prob, so it lives in [-1, 0] and higher means the
// victim is more confused.
struct Action {
    models::EditKind kind = models::EditKind::Replace;
    std::size_t position = 0;
    std::string fill;
    double score = 0.0;
    double resulting_gold_prob = 0.0;
};

// Applies one edit at `pos`: replace keeps the length, insert grows it by
// one (fill lands at pos+1), merge shrinks it by one. Frozen positions are
// remapped to the new indices. Throws std::out_of_range on bad positions.
text::TokenizedText apply_edit(const text::TokenizedText& x, models::EditKind kind, std::size_t pos,
                               const std::string& fill);

text::TokenizedText apply_action(const text::TokenizedText& x, const Action& a);

// Scores the edit by the victim's gold-label probability on the fully
// applied text.
Action score_action(const text::TokenizedText& x, const std::string& gold_label,
                    models::EditKind kind, std::size_t pos, const std::string& fill,
                    const models::VictimClassifier& victim,
                    const text::TokenizedText* paired = nullptr);

} // namespace maskfill::perturb
