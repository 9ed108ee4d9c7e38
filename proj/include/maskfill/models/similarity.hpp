#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "maskfill/models/interfaces.hpp"

namespace maskfill::models {

// Cosine similarity between the mean word vectors of the two texts, with a
// Jaccard fallback over lowercased token sets when either text has no
// in-vocabulary tokens at all (or no vectors are loaded). Lookups try the
// exact surface first, then its lowercased form.
class WordVecSimilarity final : public SimilarityScorer {
public:
    WordVecSimilarity() = default; // empty vocabulary: Jaccard only

    // One line per word: "word v1 v2 ... vd", single fixed d per file.
    static WordVecSimilarity from_file(const std::filesystem::path& path);
    static WordVecSimilarity from_vectors(std::map<std::string, std::vector<double>> vectors);

    double score(const text::TokenizedText& a, const text::TokenizedText& b,
                 std::optional<Window> window = std::nullopt) const override;

    std::size_t vocabulary_size() const { return vectors_.size(); }

private:
    std::map<std::string, std::vector<double>> vectors_;
    std::size_t dim_ = 0;
};

} // namespace maskfill::models
