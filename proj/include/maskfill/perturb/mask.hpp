#pragma once

#include "maskfill/models/types.hpp"
#include "maskfill/text/token.hpp"

namespace maskfill::perturb {

// The three masking strategies. All throw std::out_of_range for bad
// positions and std::invalid_argument when a masked position is frozen.
// mask_merge masks the bigram (i, i+1) with a single mask.
models::MaskedContext mask_replace(const text::TokenizedText& x, std::size_t i);
models::MaskedContext mask_insert(const text::TokenizedText& x, std::size_t i);
models::MaskedContext mask_merge(const text::TokenizedText& x, std::size_t i);

} // namespace maskfill::perturb
