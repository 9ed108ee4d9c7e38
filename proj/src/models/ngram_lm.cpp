#include "maskfill/models/ngram_lm.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "maskfill/util/num.hpp"

namespace maskfill::models {

namespace {

std::string join_key(const std::vector<std::string>& parts) {
    std::string key;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) key += ' ';
        key += parts[i];
    }
    return key;
}

} // namespace

ReferenceNgramLm ReferenceNgramLm::train(const std::vector<text::TokenizedText>& corpus, int order,
                                         double delta) {
    if (order < 1 || order > 3) throw std::invalid_argument("ngram order must be in [1,3]");
    if (delta < 0.0) throw std::invalid_argument("smoothing delta must be >= 0");
    bool any_tokens = false;
    for (const auto& s : corpus) {
        if (!s.empty()) {
            any_tokens = true;
            break;
        }
    }
    if (!any_tokens) throw std::invalid_argument("empty corpus");

    ReferenceNgramLm lm;
    lm.order_ = order;
    lm.delta_ = delta;
    const std::size_t ctx_len = static_cast<std::size_t>(order - 1);

    for (const auto& sentence : corpus) {
        const auto& toks = sentence.tokens;
        const std::size_t n = toks.size();
        for (std::size_t t = 0; t < n; ++t) {
            ++lm.unigram_[toks[t].surface];
            ++lm.unigram_total_;

            std::vector<std::string> fwd_ctx;
            for (std::size_t back = ctx_len; back >= 1; --back) {
                fwd_ctx.push_back(t >= back ? toks[t - back].surface : std::string(kBos));
            }
            std::string fkey = join_key(fwd_ctx);
            ++lm.forward_[fkey][toks[t].surface];
            ++lm.forward_total_[fkey];

            std::vector<std::string> bwd_ctx;
            for (std::size_t ahead = 1; ahead <= ctx_len; ++ahead) {
                bwd_ctx.push_back(t + ahead < n ? toks[t + ahead].surface : std::string(kEos));
            }
            std::string bkey = join_key(bwd_ctx);
            ++lm.backward_[bkey][toks[t].surface];
            ++lm.backward_total_[bkey];
        }
    }
    lm.trained_ = true;
    return lm;
}

ReferenceNgramLm ReferenceNgramLm::train(const text::Dataset& corpus, int order, double delta) {
    std::vector<text::TokenizedText> texts;
    texts.reserve(corpus.examples.size() * 2);
    for (const auto& ex : corpus.examples) {
        texts.push_back(ex.text_a);
        if (ex.text_b) texts.push_back(*ex.text_b);
    }
    return train(texts, order, delta);
}

std::size_t ReferenceNgramLm::vocab_size() const { return unigram_.size() + 2; }

std::vector<std::string> ReferenceNgramLm::vocabulary() const {
    std::vector<std::string> v;
    v.reserve(vocab_size());
    for (const auto& [tok, _] : unigram_) v.push_back(tok);
    v.push_back(kBos);
    v.push_back(kEos);
    return v;
}

double ReferenceNgramLm::smoothed_unigram(const std::string& token) const {
    auto it = unigram_.find(token);
    double count = it == unigram_.end() ? 0.0 : static_cast<double>(it->second);
    if (delta_ == 0.0) {
        return unigram_total_ == 0 ? 0.0 : count / static_cast<double>(unigram_total_);
    }
    return (count + delta_) /
           (static_cast<double>(unigram_total_) + delta_ * static_cast<double>(vocab_size()));
}

double ReferenceNgramLm::side_factor(
    const std::map<std::string, std::map<std::string, std::uint64_t>>& table,
    const std::string& ctx_key, const std::string& token) const {
    const auto& totals = &table == &forward_ ? forward_total_ : backward_total_;
    auto total_it = totals.find(ctx_key);
    double total = total_it == totals.end() ? 0.0 : static_cast<double>(total_it->second);
    double count = 0.0;
    if (auto ctx_it = table.find(ctx_key); ctx_it != table.end()) {
        if (auto tok_it = ctx_it->second.find(token); tok_it != ctx_it->second.end()) {
            count = static_cast<double>(tok_it->second);
        }
    }
    if (delta_ == 0.0) {
        if (total == 0.0) return smoothed_unigram(token); // unseen context falls back to unigram
        return count / total;
    }
    return (count + delta_) / (total + delta_ * static_cast<double>(vocab_size()));
}

std::string ReferenceNgramLm::forward_key(const std::vector<text::Token>& left) const {
    const std::size_t ctx_len = static_cast<std::size_t>(order_ - 1);
    std::vector<std::string> parts;
    for (std::size_t back = ctx_len; back >= 1; --back) {
        parts.push_back(left.size() >= back ? left[left.size() - back].surface : std::string(kBos));
    }
    return join_key(parts);
}

std::string ReferenceNgramLm::backward_key(const std::vector<text::Token>& right) const {
    const std::size_t ctx_len = static_cast<std::size_t>(order_ - 1);
    std::vector<std::string> parts;
    for (std::size_t ahead = 1; ahead <= ctx_len; ++ahead) {
        parts.push_back(ahead <= right.size() ? right[ahead - 1].surface : std::string(kEos));
    }
    return join_key(parts);
}

VocabDistribution ReferenceNgramLm::predict(const MaskedContext& ctx) const {
    if (!trained_) throw std::runtime_error("model not trained");

    const bool has_left = !ctx.left.empty();
    const bool has_right = !ctx.right.empty();

    const std::map<std::string, std::uint64_t>* fwd_row = nullptr;
    const std::map<std::string, std::uint64_t>* bwd_row = nullptr;
    double fwd_total = 0.0;
    double bwd_total = 0.0;
    if (has_left) {
        std::string fkey = forward_key(ctx.left);
        if (auto it = forward_.find(fkey); it != forward_.end()) fwd_row = &it->second;
        if (auto it = forward_total_.find(fkey); it != forward_total_.end()) {
            fwd_total = static_cast<double>(it->second);
        }
    }
    if (has_right) {
        std::string bkey = backward_key(ctx.right);
        if (auto it = backward_.find(bkey); it != backward_.end()) bwd_row = &it->second;
        if (auto it = backward_total_.find(bkey); it != backward_total_.end()) {
            bwd_total = static_cast<double>(it->second);
        }
    }

    auto row_factor = [&](const std::map<std::string, std::uint64_t>* row, double total,
                          const std::string& tok) -> double {
        double count = 0.0;
        if (row != nullptr) {
            if (auto it = row->find(tok); it != row->end()) count = static_cast<double>(it->second);
        }
        if (delta_ == 0.0) {
            if (total == 0.0) return smoothed_unigram(tok);
            return count / total;
        }
        return (count + delta_) / (total + delta_ * static_cast<double>(vocab_size()));
    };

    auto score_one = [&](const std::string& tok) -> double {
        if (!has_left && !has_right) return smoothed_unigram(tok);
        double s = 1.0;
        if (has_left) s *= row_factor(fwd_row, fwd_total, tok);
        if (has_right) s *= row_factor(bwd_row, bwd_total, tok);
        return s;
    };

    VocabDistribution dist;
    double sum = 0.0;
    auto score_all = [&](auto&& fn) {
        dist.probs.clear();
        sum = 0.0;
        for (const auto& [tok, _] : unigram_) {
            double s = fn(tok);
            dist.probs[tok] = s;
            sum += s;
        }
        for (const char* boundary : {kBos, kEos}) {
            double s = fn(std::string(boundary));
            dist.probs[boundary] = s;
            sum += s;
        }
    };

    score_all(score_one);
    if (sum <= 0.0) {
        // delta = 0 with disjoint left/right evidence zeroes every product.
        score_all([&](const std::string& tok) { return smoothed_unigram(tok); });
    }
    if (sum > 0.0) {
        for (auto& [_, p] : dist.probs) p /= sum;
    }
    return dist;
}

double ReferenceNgramLm::perplexity(const text::TokenizedText& input) const {
    if (!trained_) throw std::runtime_error("model not trained");
    if (input.empty()) throw std::invalid_argument("perplexity of empty text");

    const std::size_t ctx_len = static_cast<std::size_t>(order_ - 1);
    double nll = 0.0;
    for (std::size_t t = 0; t < input.size(); ++t) {
        std::vector<std::string> parts;
        for (std::size_t back = ctx_len; back >= 1; --back) {
            parts.push_back(t >= back ? input.tokens[t - back].surface : std::string(kBos));
        }
        double p = side_factor(forward_, join_key(parts), input.tokens[t].surface);
        nll -= std::log(p);
    }
    return std::exp(nll / static_cast<double>(input.size()));
}

void ReferenceNgramLm::save(const std::filesystem::path& path) const {
    if (!trained_) throw std::runtime_error("model not trained");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path.string());
    out << "maskfill-ngram 1\n";
    out << "order " << order_ << "\n";
    out << "delta " << util::fmt_double(delta_) << "\n";
    out << "unigram " << unigram_.size() << "\n";
    for (const auto& [tok, c] : unigram_) out << tok << ' ' << c << "\n";
    auto dump_table = [&](const char* name,
                          const std::map<std::string, std::map<std::string, std::uint64_t>>& table) {
        std::size_t rows = 0;
        for (const auto& [_, inner] : table) rows += inner.size();
        out << name << ' ' << rows << "\n";
        for (const auto& [key, inner] : table) {
            for (const auto& [tok, c] : inner) {
                if (!key.empty()) out << key << ' ';
                out << tok << ' ' << c << "\n";
            }
        }
    };
    dump_table("forward", forward_);
    dump_table("backward", backward_);
    if (!out) throw std::runtime_error("failed writing model file: " + path.string());
}

ReferenceNgramLm ReferenceNgramLm::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path.string());
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "maskfill-ngram" || version != 1) {
        throw std::runtime_error("not a maskfill ngram model: " + path.string());
    }

    ReferenceNgramLm lm;
    std::string field;
    in >> field >> lm.order_;
    if (field != "order") throw std::runtime_error("malformed model file (order): " + path.string());
    std::string delta_repr;
    in >> field >> delta_repr;
    if (field != "delta") throw std::runtime_error("malformed model file (delta): " + path.string());
    lm.delta_ = util::parse_double(delta_repr);

    std::size_t rows = 0;
    in >> field >> rows;
    if (field != "unigram") throw std::runtime_error("malformed model file (unigram): " + path.string());
    for (std::size_t i = 0; i < rows; ++i) {
        std::string tok;
        std::uint64_t c = 0;
        in >> tok >> c;
        lm.unigram_[tok] = c;
        lm.unigram_total_ += c;
    }

    const std::size_t ctx_len = static_cast<std::size_t>(lm.order_ - 1);
    auto read_table = [&](const char* name,
                          std::map<std::string, std::map<std::string, std::uint64_t>>& table,
                          std::map<std::string, std::uint64_t>& totals) {
        in >> field >> rows;
        if (field != name) throw std::runtime_error("malformed model file (" + std::string(name) + ")");
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<std::string> parts(ctx_len);
            for (auto& p : parts) in >> p;
            std::string tok;
            std::uint64_t c = 0;
            in >> tok >> c;
            std::string key = join_key(parts);
            table[key][tok] = c;
            totals[key] += c;
        }
    };
    read_table("forward", lm.forward_, lm.forward_total_);
    read_table("backward", lm.backward_, lm.backward_total_);
    if (!in) throw std::runtime_error("truncated model file: " + path.string());
    lm.trained_ = true;
    return lm;
}

} // namespace maskfill::models
