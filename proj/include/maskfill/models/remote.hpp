#pragma once

#include <atomic>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "maskfill/models/interfaces.hpp"
#include "maskfill/models/types.hpp"

// JSON-over-HTTP clients for every model role. All requests are POSTs of a
// UTF-8 JSON body; the server answers 200 with a JSON object or 4xx for a
// malformed request. Endpoints:
//   /mlm        {left:[...], right:[...], kind:"replace|insert|merge"} -> {probs:{token:p}}
//   /victim     {tokens:[...], pair:[...]?}                            -> {probs:{label:p}}
//   /similarity {a:[...], b:[...], window:int?}                        -> {score:float}
//   /perplexity {tokens:[...]}                                         -> {ppl:float}
//   /grammar    {tokens:[...]}                                         -> {count:int}
//   /pos        {tokens:[...]}                                         -> {tags:[...]}
// Windowed similarity is cropped client-side (the window center never
// crosses the wire); the window size rides along for the server's benefit.
namespace maskfill::models {

// Connection/timeout failures, thrown after the configured retries.
class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Responses that parse but violate the protocol; the message names the
// offending field.
class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shared POST/retry/parse machinery. Distributions whose probabilities do
// not sum to 1 (beyond 1e-6) are renormalized with a logged warning.
class RemoteClientBase {
public:
    explicit RemoteClientBase(ModelEndpoint endpoint) : endpoint_(std::move(endpoint)) {}

    int warning_count() const { return warnings_.load(); }
    const ModelEndpoint& endpoint() const { return endpoint_; }

protected:
    nlohmann::json post(const std::string& path, const nlohmann::json& body) const;
    // Returns the renormalized map under `field`; throws ProtocolError on a
    // missing field, a non-numeric or negative entry, or a non-positive sum.
    std::map<std::string, double> parse_distribution(const nlohmann::json& response,
                                                     const std::string& field) const;

private:
    ModelEndpoint endpoint_;
    mutable std::atomic<int> warnings_{0};
};

class RemoteMlm final : public RemoteClientBase, public MaskedLanguageModel {
public:
    using RemoteClientBase::RemoteClientBase;
    VocabDistribution predict(const MaskedContext& ctx) const override;
};

class RemoteVictim final : public RemoteClientBase, public VictimClassifier {
public:
    using RemoteClientBase::RemoteClientBase;
    LabelDistribution predict(const text::TokenizedText& input,
                              const text::TokenizedText* paired = nullptr) const override;
    // Remote label sets are not known up front; argmax falls back to
    // lexicographic tie-breaking.
    std::vector<std::string> labels() const override { return {}; }
};

class RemoteSimilarity final : public RemoteClientBase, public SimilarityScorer {
public:
    using RemoteClientBase::RemoteClientBase;
    double score(const text::TokenizedText& a, const text::TokenizedText& b,
                 std::optional<Window> window = std::nullopt) const override;
};

class RemotePerplexity final : public RemoteClientBase, public PerplexityScorer {
public:
    using RemoteClientBase::RemoteClientBase;
    double perplexity(const text::TokenizedText& input) const override;
};

class RemoteGrammar final : public RemoteClientBase, public GrammarChecker {
public:
    using RemoteClientBase::RemoteClientBase;
    int count_errors(const text::TokenizedText& input) const override;
};

class RemotePosTagger final : public RemoteClientBase, public PosTagger {
public:
    using RemoteClientBase::RemoteClientBase;
    std::vector<PosTag> tag(const text::TokenizedText& input) const override;
};

} // namespace maskfill::models
