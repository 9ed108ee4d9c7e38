#pragma once

#include "maskfill/models/interfaces.hpp"

namespace maskfill::models {

// Lexicon-first tagger: punctuation and numerals are recognized directly,
// known words come from a built-in lexicon of frequent English words, and
// remaining words fall through a suffix table before defaulting to OTHER.
class LexiconPosTagger final : public PosTagger {
public:
    std::vector<PosTag> tag(const text::TokenizedText& input) const override;

    // Tag for a single surface, same lookup order as tag().
    static PosTag tag_surface(const std::string& surface, bool is_punct);
};

} // namespace maskfill::models
