#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "maskfill/models/interfaces.hpp"
#include "maskfill/text/dataset.hpp"

namespace maskfill::models {

// Count-based infill model: the probability of a fill token is the product of
// a forward factor conditioned on the (order-1) tokens left of the mask and a
// backward factor conditioned on the tokens right of it, additive-smoothed by
// delta and renormalized over the vocabulary. Short contexts are padded with
// sentence-boundary symbols; an empty side contributes no factor, and a mask
// with no context on either side falls back to the smoothed unigram
// distribution. With delta = 0, an unseen context also falls back to the
// unigram factor for that side.
//
// Boundary symbols count toward the reported vocabulary size but are never
// predicted as fills (only observed corpus tokens carry count mass).
//
// Doubles as the perplexity scorer: perplexity is the exp of the mean
// negative log-likelihood of the forward-factor chain.
class ReferenceNgramLm final : public MaskedLanguageModel, public PerplexityScorer {
public:
    static constexpr const char* kBos = "<s>";
    static constexpr const char* kEos = "</s>";

    ReferenceNgramLm() = default;

    // Throws std::invalid_argument on an empty corpus or order outside [1,3].
    static ReferenceNgramLm train(const std::vector<text::TokenizedText>& corpus, int order = 3,
                                  double delta = 0.1);
    static ReferenceNgramLm train(const text::Dataset& corpus, int order = 3, double delta = 0.1);

    VocabDistribution predict(const MaskedContext& ctx) const override;
    double perplexity(const text::TokenizedText& input) const override;

    bool trained() const { return trained_; }
    // Distinct corpus tokens plus the two boundary symbols.
    std::size_t vocab_size() const;
    int order() const { return order_; }
    double delta() const { return delta_; }
    std::vector<std::string> vocabulary() const;

    void save(const std::filesystem::path& path) const;
    static ReferenceNgramLm load(const std::filesystem::path& path);

private:
    double side_factor(const std::map<std::string, std::map<std::string, std::uint64_t>>& table,
                       const std::string& ctx_key, const std::string& token) const;
    double smoothed_unigram(const std::string& token) const;
    std::string forward_key(const std::vector<text::Token>& left) const;
    std::string backward_key(const std::vector<text::Token>& right) const;

    int order_ = 3;
    double delta_ = 0.1;
    bool trained_ = false;
    std::map<std::string, std::uint64_t> unigram_;
    std::uint64_t unigram_total_ = 0;
    // context key -> fill token -> count
    std::map<std::string, std::map<std::string, std::uint64_t>> forward_;
    std::map<std::string, std::map<std::string, std::uint64_t>> backward_;
    std::map<std::string, std::uint64_t> forward_total_;
    std::map<std::string, std::uint64_t> backward_total_;
};

} // namespace maskfill::models
