#include "maskfill/models/interfaces.hpp"

namespace maskfill::models {

text::TokenizedText crop_window(const text::TokenizedText& input, std::size_t center, std::size_t size) {
    if (size == 0 || input.empty()) return {};
    std::size_t half = (size - 1) / 2;
    std::size_t lo = center > half ? center - half : 0;
    std::size_t hi = std::min(input.size(), center + size / 2 + 1);
    text::TokenizedText out;
    if (lo >= hi) return out;
    out.tokens.assign(input.tokens.begin() + static_cast<std::ptrdiff_t>(lo),
                      input.tokens.begin() + static_cast<std::ptrdiff_t>(hi));
    return out;
}

} // namespace maskfill::models
