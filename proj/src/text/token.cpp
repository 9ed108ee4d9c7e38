#include "maskfill/text/token.hpp"

#include <cctype>
#include <stdexcept>

namespace maskfill::text {

namespace {

bool is_space_char(unsigned char c) { return std::isspace(c) != 0; }
bool is_punct_char(unsigned char c) { return std::ispunct(c) != 0; }

} // namespace

bool is_punct_surface(std::string_view surface) {
    if (surface.empty()) return false;
    for (unsigned char c : surface) {
        if (!is_punct_char(c)) return false;
    }
    return true;
}

Token Token::of(std::string surface) {
    if (surface.empty()) throw std::invalid_argument("token surface is empty");
    for (unsigned char c : surface) {
        if (is_space_char(c)) throw std::invalid_argument("token surface contains whitespace: '" + surface + "'");
    }
    Token t;
    t.is_punct = is_punct_surface(surface);
    t.surface = std::move(surface);
    return t;
}

std::vector<std::string> TokenizedText::surfaces() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
}

TokenizedText tokenize(std::string_view raw) {
    TokenizedText out;
    std::size_t pos = 0;
    while (pos < raw.size()) {
        while (pos < raw.size() && is_space_char(static_cast<unsigned char>(raw[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < raw.size() && !is_space_char(static_cast<unsigned char>(raw[pos]))) ++pos;
        if (pos == start) break;
        std::string_view chunk = raw.substr(start, pos - start);

        std::size_t i = 0;
        std::size_t j = chunk.size();
        while (i < j && is_punct_char(static_cast<unsigned char>(chunk[i]))) ++i;
        while (j > i && is_punct_char(static_cast<unsigned char>(chunk[j - 1]))) --j;

        for (std::size_t p = 0; p < i; ++p) {
            out.tokens.push_back(Token{std::string(1, chunk[p]), true});
        }
        if (j > i) {
            out.tokens.push_back(Token::of(std::string(chunk.substr(i, j - i))));
        }
        for (std::size_t p = j; p < chunk.size(); ++p) {
            out.tokens.push_back(Token{std::string(1, chunk[p]), true});
        }
    }
    return out;
}

std::string detokenize(const TokenizedText& text) {
    std::string out;
    for (std::size_t i = 0; i < text.tokens.size(); ++i) {
        if (i > 0 && !text.tokens[i].is_punct) out += ' ';
        out += text.tokens[i].surface;
    }
    return out;
}

TokenizedText from_surfaces(const std::vector<std::string>& surfaces) {
    TokenizedText out;
    out.tokens.reserve(surfaces.size());
    for (const auto& s : surfaces) out.tokens.push_back(Token::of(s));
    return out;
}

} // namespace maskfill::text
