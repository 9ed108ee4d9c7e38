#include <doctest.h>

#include <stdexcept>

#include <cctype>
#include <random>

#include "maskfill/text/token.hpp"

using namespace maskfill;

namespace {

std::vector<std::string> surfaces(const text::TokenizedText& t) { return t.surfaces(); }

std::string random_text(std::mt19937_64& rng) {
    static const std::string pool = "abcXYZ'.,!()-  \t9";
    std::size_t len = rng() % 40;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += pool[rng() % pool.size()];
    return s;
}

} // namespace

TEST_CASE("tokenize: empty input yields zero tokens") {
    CHECK(text::tokenize("").tokens.empty());
    CHECK(text::tokenize("   \t  ").tokens.empty());
}

TEST_CASE("tokenize: trailing punctuation is detached and flagged") {
    text::TokenizedText t = text::tokenize("The movie is fantastic.");
    CHECK(surfaces(t) == std::vector<std::string>{"The", "movie", "is", "fantastic", "."});
    CHECK_FALSE(t.tokens[3].is_punct);
    CHECK(t.tokens[4].is_punct);
    CHECK(t.frozen.empty());
}

TEST_CASE("tokenize: internal apostrophe stays inside the word") {
    text::TokenizedText t = text::tokenize("don't stop");
    CHECK(surfaces(t) == std::vector<std::string>{"don't", "stop"});
    CHECK_FALSE(t.tokens[0].is_punct);
}

TEST_CASE("tokenize: leading punctuation and all-punct chunks") {
    CHECK(surfaces(text::tokenize("(hello).")) ==
          std::vector<std::string>{"(", "hello", ")", "."});
    text::TokenizedText dashes = text::tokenize("a -- b");
    CHECK(surfaces(dashes) == std::vector<std::string>{"a", "-", "-", "b"});
    CHECK(dashes.tokens[1].is_punct);
}

TEST_CASE("tokenize: no token ever contains whitespace") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        text::TokenizedText t = text::tokenize(random_text(rng));
        for (const auto& tok : t.tokens) {
            CHECK_FALSE(tok.surface.empty());
            for (unsigned char c : tok.surface) CHECK_FALSE(std::isspace(c));
        }
    }
}

TEST_CASE("detokenize: joins with spaces except before punctuation") {
    CHECK(text::detokenize({}) == "");
    CHECK(text::detokenize(text::from_surfaces({"The", "movie", "."})) == "The movie.");
    CHECK(text::detokenize(text::from_surfaces({"a", ",", "b"})) == "a, b");
}

TEST_CASE("tokenize/detokenize round trip is idempotent on tokens") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        std::string s = random_text(rng);
        text::TokenizedText once = text::tokenize(s);
        text::TokenizedText twice = text::tokenize(text::detokenize(once));
        CHECK(once.tokens == twice.tokens);
    }
}

TEST_CASE("Token::of validates surfaces") {
    CHECK_THROWS_AS(text::Token::of(""), std::invalid_argument);
    CHECK_THROWS_AS(text::Token::of("two words"), std::invalid_argument);
    CHECK(text::Token::of(".").is_punct);
    CHECK(text::Token::of("...").is_punct);
    CHECK_FALSE(text::Token::of("a.b").is_punct);
}
