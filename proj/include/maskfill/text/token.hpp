#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace maskfill::text {

// A single word-level token. Surfaces are never empty and never contain
// whitespace; is_punct marks tokens made entirely of ASCII punctuation.
struct Token {
    std::string surface;
    bool is_punct = false;

    // Builds a token from a surface, computing is_punct. Throws
    // std::invalid_argument on empty or whitespace-containing surfaces.
    static Token of(std::string surface);

    bool operator==(const Token&) const = default;
};

bool is_punct_surface(std::string_view surface);

// A token sequence plus the set of positions the attack must not touch.
struct TokenizedText {
    std::vector<Token> tokens;
    std::set<std::size_t> frozen;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
    bool frozen_at(std::size_t i) const { return frozen.count(i) != 0; }
    const std::string& surface(std::size_t i) const { return tokens[i].surface; }
    std::vector<std::string> surfaces() const;

    bool operator==(const TokenizedText&) const = default;
};

// Whitespace split with leading/trailing ASCII punctuation detached into
// separate single-character punct tokens. Internal punctuation ("don't",
// "black-box") stays inside the word. Empty input gives zero tokens.
TokenizedText tokenize(std::string_view raw);

// Joins surfaces with single spaces, omitting the space before punct tokens.
std::string detokenize(const TokenizedText& text);

// Convenience constructor used by loaders and tests; computes is_punct.
TokenizedText from_surfaces(const std::vector<std::string>& surfaces);

} // namespace maskfill::text
