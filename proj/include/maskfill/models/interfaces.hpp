#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maskfill/models/types.hpp"
#include "maskfill/text/token.hpp"

// Interfaces for every learned or scored component the attack engine talks
// to. Implementations must be safe for concurrent read-only queries.
namespace maskfill::models {

class MaskedLanguageModel {
public:
    virtual ~MaskedLanguageModel() = default;
    virtual VocabDistribution predict(const MaskedContext& ctx) const = 0;
};

class VictimClassifier {
public:
    virtual ~VictimClassifier() = default;
    // paired, when present, is the untouched companion text of a pair task.
    virtual LabelDistribution predict(const text::TokenizedText& input,
                                      const text::TokenizedText* paired = nullptr) const = 0;
    // Label order used for deterministic argmax tie-breaking; may be empty
    // for implementations that do not know their label set up front.
    virtual std::vector<std::string> labels() const = 0;
};

class SimilarityScorer {
public:
    // Crop both texts to `size` tokens around `center` before scoring.
    struct Window {
        std::size_t size = 15;
        std::size_t center = 0;
    };

    virtual ~SimilarityScorer() = default;
    // Symmetric, in [-1, 1]; identical texts score 1. Empty vs empty is 1,
    // empty vs non-empty is 0.
    virtual double score(const text::TokenizedText& a, const text::TokenizedText& b,
                         std::optional<Window> window = std::nullopt) const = 0;
};

class PerplexityScorer {
public:
    virtual ~PerplexityScorer() = default;
    // exp of mean negative log-likelihood; throws on empty text.
    virtual double perplexity(const text::TokenizedText& input) const = 0;
};

class GrammarChecker {
public:
    virtual ~GrammarChecker() = default;
    virtual int count_errors(const text::TokenizedText& input) const = 0;
};

class PosTagger {
public:
    virtual ~PosTagger() = default;
    virtual std::vector<PosTag> tag(const text::TokenizedText& input) const = 0;
};

// Window of `size` tokens centered on `center`, clipped at the boundaries.
text::TokenizedText crop_window(const text::TokenizedText& input, std::size_t center, std::size_t size);

// The full model stack an attack or evaluation run needs.
struct ModelSet {
    std::shared_ptr<const MaskedLanguageModel> mlm;
    std::shared_ptr<const VictimClassifier> victim;
    std::shared_ptr<const SimilarityScorer> similarity;
    std::shared_ptr<const PerplexityScorer> perplexity;
    std::shared_ptr<const GrammarChecker> grammar;
    std::shared_ptr<const PosTagger> pos;
};

} // namespace maskfill::models
