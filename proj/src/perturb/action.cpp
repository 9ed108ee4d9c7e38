#include "maskfill/perturb/action.hpp"

#include <stdexcept>

namespace maskfill::perturb {

using models::EditKind;
using text::TokenizedText;

TokenizedText apply_edit(const TokenizedText& x, EditKind kind, std::size_t pos,
                         const std::string& fill) {
    const std::size_t n = x.size();
    TokenizedText out;
    out.tokens.reserve(n + 1);
    text::Token fill_token = text::Token::of(fill);

    switch (kind) {
        case EditKind::Replace: {
            if (pos >= n) throw std::out_of_range("apply_edit: replace position out of range");
            out.tokens = x.tokens;
            out.tokens[pos] = fill_token;
            out.frozen = x.frozen;
            break;
        }
        case EditKind::Insert: {
            if (pos >= n) throw std::out_of_range("apply_edit: insert position out of range");
            out.tokens.assign(x.tokens.begin(), x.tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
            out.tokens.push_back(fill_token);
            out.tokens.insert(out.tokens.end(), x.tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                              x.tokens.end());
            for (std::size_t f : x.frozen) out.frozen.insert(f > pos ? f + 1 : f);
            break;
        }
        case EditKind::Merge: {
            if (pos + 1 >= n) throw std::out_of_range("apply_edit: merge position out of range");
            out.tokens.assign(x.tokens.begin(), x.tokens.begin() + static_cast<std::ptrdiff_t>(pos));
            out.tokens.push_back(fill_token);
            out.tokens.insert(out.tokens.end(), x.tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 2,
                              x.tokens.end());
            for (std::size_t f : x.frozen) {
                if (f == pos || f == pos + 1) continue; // merged positions are never frozen
                out.frozen.insert(f > pos + 1 ? f - 1 : f);
            }
            break;
        }
    }
    return out;
}

TokenizedText apply_action(const TokenizedText& x, const Action& a) {
    return apply_edit(x, a.kind, a.position, a.fill);
}

Action score_action(const TokenizedText& x, const std::string& gold_label, EditKind kind,
                    std::size_t pos, const std::string& fill,
                    const models::VictimClassifier& victim, const TokenizedText* paired) {
    Action a;
    a.kind = kind;
    a.position = pos;
    a.fill = fill;
    TokenizedText applied = apply_edit(x, kind, pos, fill);
    a.resulting_gold_prob = victim.predict(applied, paired).prob(gold_label);
    a.score = -a.resulting_gold_prob;
    return a;
}

} // namespace maskfill::perturb
