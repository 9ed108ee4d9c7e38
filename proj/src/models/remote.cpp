#include "maskfill/models/remote.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <thread>

#include <httplib.h>

namespace maskfill::models {

namespace {

std::vector<std::string> surfaces_of(const std::vector<text::Token>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
}

} // namespace

nlohmann::json RemoteClientBase::post(const std::string& path, const nlohmann::json& body) const {
    const std::string payload = body.dump();
    const int attempts = endpoint_.retries + 1;
    std::string last_error;

    for (int attempt = 0; attempt < attempts; ++attempt) {
        if (attempt > 0) {
            // Exponential backoff between retries.
            auto delay = endpoint_.backoff * (1 << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
        // httplib clients are not safe for concurrent use; one per request
        // keeps callers free to issue requests from many threads.
        httplib::Client client(endpoint_.base_url);
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(endpoint_.timeout);
        auto usecs =
            std::chrono::duration_cast<std::chrono::microseconds>(endpoint_.timeout - secs);
        client.set_connection_timeout(secs.count(), usecs.count());
        client.set_read_timeout(secs.count(), usecs.count());
        client.set_write_timeout(secs.count(), usecs.count());

        httplib::Result res = client.Post(path, payload, "application/json");
        if (!res) {
            last_error = httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            throw ProtocolError("server returned status " + std::to_string(res->status) + " for " +
                                path + ": " + res->body);
        }
        nlohmann::json parsed = nlohmann::json::parse(res->body, nullptr, false);
        if (parsed.is_discarded()) {
            throw ProtocolError("response to " + path + " is not valid JSON");
        }
        return parsed;
    }
    throw TransportError("request to " + endpoint_.base_url + path + " failed after " +
                         std::to_string(attempts) + " attempts: " + last_error);
}

std::map<std::string, double> RemoteClientBase::parse_distribution(const nlohmann::json& response,
                                                                   const std::string& field) const {
    if (!response.contains(field)) {
        throw ProtocolError("response missing field '" + field + "'");
    }
    const auto& probs = response.at(field);
    if (!probs.is_object()) {
        throw ProtocolError("response field '" + field + "' is not an object");
    }
    std::map<std::string, double> out;
    double sum = 0.0;
    for (const auto& [key, value] : probs.items()) {
        if (!value.is_number()) {
            throw ProtocolError("probability for '" + key + "' is not a number");
        }
        double p = value.get<double>();
        if (!std::isfinite(p) || p < 0.0) {
            throw ProtocolError("probability for '" + key + "' is out of range");
        }
        out[key] = p;
        sum += p;
    }
    if (out.empty() || sum <= 0.0) {
        throw ProtocolError("response field '" + field + "' has no probability mass");
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        ++warnings_;
        std::cerr << "maskfill: remote distribution sums to " << sum << "; renormalizing\n";
        for (auto& [_, p] : out) p /= sum;
    }
    return out;
}

VocabDistribution RemoteMlm::predict(const MaskedContext& ctx) const {
    nlohmann::json body;
    body["left"] = surfaces_of(ctx.left);
    body["right"] = surfaces_of(ctx.right);
    body["kind"] = std::string(to_string(ctx.kind));
    nlohmann::json response = post("/mlm", body);
    VocabDistribution dist;
    dist.probs = parse_distribution(response, "probs");
    return dist;
}

LabelDistribution RemoteVictim::predict(const text::TokenizedText& input,
                                        const text::TokenizedText* paired) const {
    nlohmann::json body;
    body["tokens"] = input.surfaces();
    if (paired != nullptr) body["pair"] = paired->surfaces();
    nlohmann::json response = post("/victim", body);
    LabelDistribution dist;
    dist.probs = parse_distribution(response, "probs");
    return dist;
}

double RemoteSimilarity::score(const text::TokenizedText& a, const text::TokenizedText& b,
                               std::optional<Window> window) const {
    nlohmann::json body;
    if (window.has_value()) {
        body["a"] = crop_window(a, window->center, window->size).surfaces();
        body["b"] = crop_window(b, window->center, window->size).surfaces();
        body["window"] = window->size;
    } else {
        body["a"] = a.surfaces();
        body["b"] = b.surfaces();
    }
    nlohmann::json response = post("/similarity", body);
    if (!response.contains("score") || !response.at("score").is_number()) {
        throw ProtocolError("response missing numeric field 'score'");
    }
    return response.at("score").get<double>();
}

double RemotePerplexity::perplexity(const text::TokenizedText& input) const {
    if (input.empty()) throw std::invalid_argument("perplexity of empty text");
    nlohmann::json body;
    body["tokens"] = input.surfaces();
    nlohmann::json response = post("/perplexity", body);
    if (!response.contains("ppl") || !response.at("ppl").is_number()) {
        throw ProtocolError("response missing numeric field 'ppl'");
    }
    return response.at("ppl").get<double>();
}

int RemoteGrammar::count_errors(const text::TokenizedText& input) const {
    nlohmann::json body;
    body["tokens"] = input.surfaces();
    nlohmann::json response = post("/grammar", body);
    if (!response.contains("count") || !response.at("count").is_number_integer()) {
        throw ProtocolError("response missing integer field 'count'");
    }
    int count = response.at("count").get<int>();
    if (count < 0) throw ProtocolError("field 'count' is negative");
    return count;
}

std::vector<PosTag> RemotePosTagger::tag(const text::TokenizedText& input) const {
    nlohmann::json body;
    body["tokens"] = input.surfaces();
    nlohmann::json response = post("/pos", body);
    if (!response.contains("tags") || !response.at("tags").is_array()) {
        throw ProtocolError("response missing array field 'tags'");
    }
    const auto& tags = response.at("tags");
    if (tags.size() != input.size()) {
        throw ProtocolError("field 'tags' has " + std::to_string(tags.size()) + " entries for " +
                            std::to_string(input.size()) + " tokens");
    }
    std::vector<PosTag> out;
    out.reserve(tags.size());
    for (const auto& t : tags) {
        if (!t.is_string()) throw ProtocolError("field 'tags' contains a non-string entry");
        try {
            out.push_back(pos_tag_from_string(t.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ProtocolError(std::string("field 'tags': ") + e.what());
        }
    }
    return out;
}

} // namespace maskfill::models
