#include "maskfill/models/grammar.hpp"

#include <cctype>
#include <string>

namespace maskfill::models {

namespace {

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_vowel_initial(const std::string& s) {
    if (s.empty()) return false;
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_alpha_initial(const std::string& s) {
    return !s.empty() && std::isalpha(static_cast<unsigned char>(s[0])) != 0;
}

} // namespace

int RuleGrammarChecker::count_errors(const text::TokenizedText& input) const {
    int errors = 0;
    const auto& toks = input.tokens;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        std::string cur = lowercased(toks[i].surface);
        std::string next = lowercased(toks[i + 1].surface);
        if (cur == next) ++errors;
        if (cur == "a" && is_alpha_initial(next) && is_vowel_initial(next)) ++errors;
        if (cur == "an" && is_alpha_initial(next) && !is_vowel_initial(next)) ++errors;
    }
    if (!toks.empty()) {
        const auto& last = toks.back();
        if (last.is_punct && last.surface != "." && last.surface != "!" && last.surface != "?") {
            ++errors;
        }
    }
    return errors;
}

} // namespace maskfill::models
