#include "maskfill/perturb/mask.hpp"

#include <stdexcept>

namespace maskfill::perturb {

using models::EditKind;
using models::MaskedContext;
using text::TokenizedText;

namespace {

void check_position(const TokenizedText& x, std::size_t i, const char* op) {
    if (i >= x.size()) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(i) +
                                " out of range for " + std::to_string(x.size()) + " tokens");
    }
    if (x.frozen_at(i)) {
        throw std::invalid_argument(std::string(op) + ": position " + std::to_string(i) +
                                    " is frozen");
    }
}

} // namespace

MaskedContext mask_replace(const TokenizedText& x, std::size_t i) {
    check_position(x, i, "mask_replace");
    MaskedContext ctx;
    ctx.kind = EditKind::Replace;
    ctx.origin_position = i;
    ctx.left.assign(x.tokens.begin(), x.tokens.begin() + static_cast<std::ptrdiff_t>(i));
    ctx.right.assign(x.tokens.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.tokens.end());
    ctx.replaced_surfaces = {x.surface(i)};
    return ctx;
}

MaskedContext mask_insert(const TokenizedText& x, std::size_t i) {
    check_position(x, i, "mask_insert");
    MaskedContext ctx;
    ctx.kind = EditKind::Insert;
    ctx.origin_position = i;
    ctx.left.assign(x.tokens.begin(), x.tokens.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    ctx.right.assign(x.tokens.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.tokens.end());
    return ctx;
}

MaskedContext mask_merge(const TokenizedText& x, std::size_t i) {
    if (i + 1 >= x.size()) {
        throw std::out_of_range("mask_merge: no bigram at position " + std::to_string(i) +
                                " in " + std::to_string(x.size()) + " tokens");
    }
    check_position(x, i, "mask_merge");
    if (x.frozen_at(i + 1)) {
        throw std::invalid_argument("mask_merge: position " + std::to_string(i + 1) + " is frozen");
    }
    MaskedContext ctx;
    ctx.kind = EditKind::Merge;
    ctx.origin_position = i;
    ctx.left.assign(x.tokens.begin(), x.tokens.begin() + static_cast<std::ptrdiff_t>(i));
    ctx.right.assign(x.tokens.begin() + static_cast<std::ptrdiff_t>(i) + 2, x.tokens.end());
    ctx.replaced_surfaces = {x.surface(i), x.surface(i + 1)};
    return ctx;
}

} // namespace maskfill::perturb
