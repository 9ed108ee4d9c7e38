#include "maskfill/models/pos_tagger.hpp"

#include <cctype>
#include <string>
#include <unordered_map>

namespace maskfill::models {

namespace {

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

const std::unordered_map<std::string, PosTag>& lexicon() {
    static const std::unordered_map<std::string, PosTag> table = {
        // determiners
        {"the", PosTag::Dt}, {"a", PosTag::Dt}, {"an", PosTag::Dt}, {"this", PosTag::Dt},
        {"that", PosTag::Dt}, {"these", PosTag::Dt}, {"those", PosTag::Dt}, {"my", PosTag::Dt},
        {"your", PosTag::Dt}, {"his", PosTag::Dt}, {"her", PosTag::Dt}, {"its", PosTag::Dt},
        {"our", PosTag::Dt}, {"their", PosTag::Dt}, {"every", PosTag::Dt}, {"each", PosTag::Dt},
        {"some", PosTag::Dt}, {"any", PosTag::Dt}, {"no", PosTag::Dt},
        // pronouns
        {"i", PosTag::Pron}, {"you", PosTag::Pron}, {"he", PosTag::Pron}, {"she", PosTag::Pron},
        {"it", PosTag::Pron}, {"we", PosTag::Pron}, {"they", PosTag::Pron}, {"me", PosTag::Pron},
        {"him", PosTag::Pron}, {"us", PosTag::Pron}, {"them", PosTag::Pron}, {"who", PosTag::Pron},
        {"what", PosTag::Pron}, {"which", PosTag::Pron}, {"someone", PosTag::Pron},
        {"everyone", PosTag::Pron}, {"nothing", PosTag::Pron},
        // prepositions
        {"of", PosTag::Prep}, {"in", PosTag::Prep}, {"on", PosTag::Prep}, {"at", PosTag::Prep},
        {"by", PosTag::Prep}, {"for", PosTag::Prep}, {"with", PosTag::Prep}, {"from", PosTag::Prep},
        {"to", PosTag::Prep}, {"into", PosTag::Prep}, {"over", PosTag::Prep}, {"under", PosTag::Prep},
        {"about", PosTag::Prep}, {"after", PosTag::Prep}, {"before", PosTag::Prep},
        {"between", PosTag::Prep}, {"during", PosTag::Prep}, {"through", PosTag::Prep},
        {"against", PosTag::Prep}, {"without", PosTag::Prep}, {"within", PosTag::Prep},
        {"near", PosTag::Prep},
        // frequent verbs
        {"is", PosTag::Verb}, {"am", PosTag::Verb}, {"are", PosTag::Verb}, {"was", PosTag::Verb},
        {"were", PosTag::Verb}, {"be", PosTag::Verb}, {"been", PosTag::Verb}, {"being", PosTag::Verb},
        {"have", PosTag::Verb}, {"has", PosTag::Verb}, {"had", PosTag::Verb}, {"do", PosTag::Verb},
        {"does", PosTag::Verb}, {"did", PosTag::Verb}, {"will", PosTag::Verb}, {"would", PosTag::Verb},
        {"can", PosTag::Verb}, {"could", PosTag::Verb}, {"shall", PosTag::Verb},
        {"should", PosTag::Verb}, {"may", PosTag::Verb}, {"might", PosTag::Verb},
        {"must", PosTag::Verb}, {"go", PosTag::Verb}, {"goes", PosTag::Verb}, {"went", PosTag::Verb},
        {"make", PosTag::Verb}, {"made", PosTag::Verb}, {"get", PosTag::Verb}, {"got", PosTag::Verb},
        {"take", PosTag::Verb}, {"took", PosTag::Verb}, {"see", PosTag::Verb}, {"saw", PosTag::Verb},
        {"say", PosTag::Verb}, {"said", PosTag::Verb}, {"come", PosTag::Verb}, {"came", PosTag::Verb},
        {"know", PosTag::Verb}, {"knew", PosTag::Verb}, {"think", PosTag::Verb},
        {"thought", PosTag::Verb}, {"want", PosTag::Verb}, {"need", PosTag::Verb},
        {"use", PosTag::Verb}, {"find", PosTag::Verb}, {"give", PosTag::Verb}, {"tell", PosTag::Verb},
        {"work", PosTag::Verb}, {"call", PosTag::Verb}, {"try", PosTag::Verb}, {"ask", PosTag::Verb},
        {"feel", PosTag::Verb}, {"felt", PosTag::Verb}, {"seem", PosTag::Verb},
        {"seemed", PosTag::Verb}, {"leave", PosTag::Verb}, {"put", PosTag::Verb},
        {"looked", PosTag::Verb}, {"sounded", PosTag::Verb}, {"recommend", PosTag::Verb},
        {"stop", PosTag::Verb}, {"run", PosTag::Verb},
        // frequent adjectives
        {"good", PosTag::Adj}, {"bad", PosTag::Adj}, {"great", PosTag::Adj}, {"small", PosTag::Adj},
        {"big", PosTag::Adj}, {"large", PosTag::Adj}, {"new", PosTag::Adj}, {"old", PosTag::Adj},
        {"young", PosTag::Adj}, {"long", PosTag::Adj}, {"short", PosTag::Adj}, {"high", PosTag::Adj},
        {"low", PosTag::Adj}, {"hot", PosTag::Adj}, {"cold", PosTag::Adj}, {"happy", PosTag::Adj},
        {"sad", PosTag::Adj}, {"nice", PosTag::Adj}, {"poor", PosTag::Adj}, {"rich", PosTag::Adj},
        {"fast", PosTag::Adj}, {"slow", PosTag::Adj}, {"easy", PosTag::Adj}, {"hard", PosTag::Adj},
        {"early", PosTag::Adj}, {"late", PosTag::Adj}, {"important", PosTag::Adj},
        {"few", PosTag::Adj}, {"many", PosTag::Adj}, {"much", PosTag::Adj}, {"other", PosTag::Adj},
        {"same", PosTag::Adj}, {"different", PosTag::Adj}, {"able", PosTag::Adj},
        {"best", PosTag::Adj}, {"worst", PosTag::Adj}, {"better", PosTag::Adj},
        {"worse", PosTag::Adj}, {"awful", PosTag::Adj}, {"fine", PosTag::Adj},
        {"fantastic", PosTag::Adj}, {"amazing", PosTag::Adj}, {"wonderful", PosTag::Adj},
        {"excellent", PosTag::Adj}, {"horrible", PosTag::Adj}, {"dull", PosTag::Adj},
        {"weak", PosTag::Adj}, {"solid", PosTag::Adj}, {"red", PosTag::Adj}, {"blue", PosTag::Adj},
        {"green", PosTag::Adj}, {"bland", PosTag::Adj}, {"superb", PosTag::Adj},
        {"sloppy", PosTag::Adj},
        // frequent adverbs
        {"very", PosTag::Adv}, {"really", PosTag::Adv}, {"quite", PosTag::Adv}, {"too", PosTag::Adv},
        {"also", PosTag::Adv}, {"just", PosTag::Adv}, {"now", PosTag::Adv}, {"then", PosTag::Adv},
        {"here", PosTag::Adv}, {"there", PosTag::Adv}, {"never", PosTag::Adv},
        {"always", PosTag::Adv}, {"often", PosTag::Adv}, {"sometimes", PosTag::Adv},
        {"again", PosTag::Adv}, {"still", PosTag::Adv}, {"well", PosTag::Adv},
        {"almost", PosTag::Adv}, {"not", PosTag::Adv}, {"rather", PosTag::Adv},
        {"truly", PosTag::Adv}, {"somehow", PosTag::Adv}, {"overall", PosTag::Adv},
        {"today", PosTag::Adv}, {"honestly", PosTag::Adv},
        // frequent nouns
        {"movie", PosTag::Noun}, {"film", PosTag::Noun}, {"time", PosTag::Noun},
        {"year", PosTag::Noun}, {"day", PosTag::Noun}, {"man", PosTag::Noun},
        {"woman", PosTag::Noun}, {"people", PosTag::Noun}, {"way", PosTag::Noun},
        {"thing", PosTag::Noun}, {"world", PosTag::Noun}, {"life", PosTag::Noun},
        {"hand", PosTag::Noun}, {"part", PosTag::Noun}, {"child", PosTag::Noun},
        {"eye", PosTag::Noun}, {"place", PosTag::Noun}, {"week", PosTag::Noun},
        {"case", PosTag::Noun}, {"point", PosTag::Noun}, {"government", PosTag::Noun},
        {"company", PosTag::Noun}, {"number", PosTag::Noun}, {"group", PosTag::Noun},
        {"problem", PosTag::Noun}, {"fact", PosTag::Noun}, {"food", PosTag::Noun},
        {"service", PosTag::Noun}, {"story", PosTag::Noun}, {"plot", PosTag::Noun},
        {"actor", PosTag::Noun}, {"music", PosTag::Noun}, {"news", PosTag::Noun},
        {"team", PosTag::Noun}, {"game", PosTag::Noun}, {"market", PosTag::Noun},
        {"business", PosTag::Noun}, {"money", PosTag::Noun}, {"school", PosTag::Noun},
        {"student", PosTag::Noun}, {"city", PosTag::Noun}, {"country", PosTag::Noun},
        {"house", PosTag::Noun}, {"area", PosTag::Noun}, {"book", PosTag::Noun},
        {"word", PosTag::Noun}, {"question", PosTag::Noun}, {"idea", PosTag::Noun},
        {"car", PosTag::Noun}, {"show", PosTag::Noun}, {"son", PosTag::Noun},
        {"dinner", PosTag::Noun}, {"song", PosTag::Noun}, {"staff", PosTag::Noun},
        {"pizza", PosTag::Noun}, {"coffee", PosTag::Noun}, {"room", PosTag::Noun},
        {"york", PosTag::Noun},
    };
    return table;
}

struct SuffixRule {
    const char* suffix;
    PosTag tag;
};

// Checked in order; first match wins. Longer suffixes come first.
constexpr SuffixRule kSuffixRules[] = {
    {"ness", PosTag::Noun}, {"tion", PosTag::Noun}, {"sion", PosTag::Noun},
    {"ment", PosTag::Noun}, {"ship", PosTag::Noun}, {"hood", PosTag::Noun},
    {"ance", PosTag::Noun}, {"ence", PosTag::Noun}, {"ible", PosTag::Adj},
    {"able", PosTag::Adj},  {"less", PosTag::Adj},  {"ful", PosTag::Adj},
    {"ous", PosTag::Adj},   {"ive", PosTag::Adj},   {"ity", PosTag::Noun},
    {"ism", PosTag::Noun},  {"ist", PosTag::Noun},  {"ize", PosTag::Verb},
    {"ise", PosTag::Verb},  {"ify", PosTag::Verb},  {"ing", PosTag::Verb},
    {"ly", PosTag::Adv},    {"ed", PosTag::Verb},
};

bool is_number_surface(const std::string& s) {
    bool any_digit = false;
    for (unsigned char c : s) {
        if (std::isdigit(c)) {
            any_digit = true;
        } else if (c != '.' && c != ',' && c != '-' && c != '%') {
            return false;
        }
    }
    return any_digit;
}

} // namespace

PosTag LexiconPosTagger::tag_surface(const std::string& surface, bool is_punct) {
    if (is_punct) return PosTag::Punct;
    if (is_number_surface(surface)) return PosTag::Num;
    std::string lower = lowercased(surface);
    auto it = lexicon().find(lower);
    if (it != lexicon().end()) return it->second;
    for (const auto& rule : kSuffixRules) {
        std::string_view sfx(rule.suffix);
        if (lower.size() > sfx.size() + 1 && lower.ends_with(sfx)) return rule.tag;
    }
    return PosTag::Other;
}

std::vector<PosTag> LexiconPosTagger::tag(const text::TokenizedText& input) const {
    std::vector<PosTag> tags;
    tags.reserve(input.size());
    for (const auto& tok : input.tokens) tags.push_back(tag_surface(tok.surface, tok.is_punct));
    return tags;
}

} // namespace maskfill::models
