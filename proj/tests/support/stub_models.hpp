#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maskfill/models/interfaces.hpp"

// Function-backed test doubles for the model interfaces.
namespace maskfill::testsupport {

struct FnMlm final : models::MaskedLanguageModel {
    std::function<models::VocabDistribution(const models::MaskedContext&)> fn;

    explicit FnMlm(std::function<models::VocabDistribution(const models::MaskedContext&)> f)
        : fn(std::move(f)) {}

    models::VocabDistribution predict(const models::MaskedContext& ctx) const override {
        return fn(ctx);
    }
};

inline FnMlm fixed_mlm(std::map<std::string, double> probs) {
    return FnMlm([probs = std::move(probs)](const models::MaskedContext&) {
        models::VocabDistribution d;
        d.probs = probs;
        return d;
    });
}

struct FnVictim final : models::VictimClassifier {
    std::function<models::LabelDistribution(const text::TokenizedText&, const text::TokenizedText*)>
        fn;
    std::vector<std::string> label_order;

    FnVictim(std::function<models::LabelDistribution(const text::TokenizedText&,
                                                     const text::TokenizedText*)> f,
             std::vector<std::string> labels)
        : fn(std::move(f)), label_order(std::move(labels)) {}

    models::LabelDistribution predict(const text::TokenizedText& input,
                                      const text::TokenizedText* paired) const override {
        return fn(input, paired);
    }
    std::vector<std::string> labels() const override { return label_order; }
};

struct FnSimilarity final : models::SimilarityScorer {
    std::function<double(const text::TokenizedText&, const text::TokenizedText&,
                         std::optional<Window>)>
        fn;

    explicit FnSimilarity(std::function<double(const text::TokenizedText&,
                                               const text::TokenizedText&, std::optional<Window>)> f)
        : fn(std::move(f)) {}

    double score(const text::TokenizedText& a, const text::TokenizedText& b,
                 std::optional<Window> window) const override {
        return fn(a, b, window);
    }
};

inline FnSimilarity constant_similarity(double value) {
    return FnSimilarity(
        [value](const text::TokenizedText&, const text::TokenizedText&,
                std::optional<models::SimilarityScorer::Window>) { return value; });
}

} // namespace maskfill::testsupport
