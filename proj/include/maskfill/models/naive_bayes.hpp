#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "maskfill/models/interfaces.hpp"
#include "maskfill/text/dataset.hpp"

namespace maskfill::models {

// Multinomial naive Bayes over lowercased token counts with additive
// smoothing. Pair inputs are bagged together; tokens outside the training
// vocabulary are ignored at prediction time.
class NaiveBayesVictim final : public VictimClassifier {
public:
    NaiveBayesVictim() = default;

    // Throws std::invalid_argument when fewer than two labels are present.
    static NaiveBayesVictim train(const text::Dataset& data, double alpha = 1.0);

    LabelDistribution predict(const text::TokenizedText& input,
                              const text::TokenizedText* paired = nullptr) const override;
    std::vector<std::string> labels() const override { return label_order_; }

    bool trained() const { return trained_; }
    double accuracy(const text::Dataset& data) const;

    void save(const std::filesystem::path& path) const;
    static NaiveBayesVictim load(const std::filesystem::path& path);

private:
    double alpha_ = 1.0;
    bool trained_ = false;
    std::vector<std::string> label_order_;
    std::map<std::string, std::uint64_t> doc_counts_;
    std::map<std::string, std::uint64_t> token_totals_;          // per label
    std::map<std::string, std::map<std::string, std::uint64_t>> token_counts_; // label -> token -> count
    std::set<std::string> vocab_;
};

} // namespace maskfill::models
