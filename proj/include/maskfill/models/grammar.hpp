#pragma once

#include "maskfill/models/interfaces.hpp"

namespace maskfill::models {

// Deterministic rule-based error count. The rules:
//   1. duplicate adjacent tokens (case-insensitive surface match)
//   2. "a" before a vowel-initial word
//   3. "an" before a consonant-initial word
//   4. the text ends in a punctuation token other than . ! ?
class RuleGrammarChecker final : public GrammarChecker {
public:
    int count_errors(const text::TokenizedText& input) const override;
};

} // namespace maskfill::models
