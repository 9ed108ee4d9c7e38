#include "maskfill/models/naive_bayes.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "maskfill/util/num.hpp"

namespace maskfill::models {

namespace {

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

NaiveBayesVictim NaiveBayesVictim::train(const text::Dataset& data, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("smoothing alpha must be >= 0");

    NaiveBayesVictim model;
    model.alpha_ = alpha;
    for (const auto& ex : data.examples) {
        if (model.doc_counts_.find(ex.gold_label) == model.doc_counts_.end()) {
            model.label_order_.push_back(ex.gold_label);
        }
        ++model.doc_counts_[ex.gold_label];
        auto count_text = [&](const text::TokenizedText& t) {
            for (const auto& tok : t.tokens) {
                std::string key = lowercased(tok.surface);
                ++model.token_counts_[ex.gold_label][key];
                ++model.token_totals_[ex.gold_label];
                model.vocab_.insert(key);
            }
        };
        count_text(ex.text_a);
        if (ex.text_b) count_text(*ex.text_b);
    }
    if (model.doc_counts_.size() < 2) {
        throw std::invalid_argument("single-label training set: naive Bayes needs >= 2 labels");
    }
    // Keep label order aligned with the dataset's declared order when given.
    if (!data.label_set.empty()) {
        std::vector<std::string> ordered;
        for (const auto& l : data.label_set) {
            if (model.doc_counts_.count(l)) ordered.push_back(l);
        }
        if (ordered.size() == model.label_order_.size()) model.label_order_ = std::move(ordered);
    }
    model.trained_ = true;
    return model;
}

LabelDistribution NaiveBayesVictim::predict(const text::TokenizedText& input,
                                            const text::TokenizedText* paired) const {
    if (!trained_) throw std::runtime_error("model not trained");

    const double total_docs = [&] {
        std::uint64_t n = 0;
        for (const auto& [_, c] : doc_counts_) n += c;
        return static_cast<double>(n);
    }();
    const double vocab_size = static_cast<double>(vocab_.size());

    std::vector<double> log_posts;
    log_posts.reserve(label_order_.size());
    for (const auto& label : label_order_) {
        double lp = std::log(static_cast<double>(doc_counts_.at(label)) / total_docs);
        const auto& counts = token_counts_.at(label);
        const double total = static_cast<double>(token_totals_.at(label));
        auto add_text = [&](const text::TokenizedText& t) {
            for (const auto& tok : t.tokens) {
                std::string key = lowercased(tok.surface);
                if (!vocab_.count(key)) continue;
                auto it = counts.find(key);
                double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
                lp += std::log((c + alpha_) / (total + alpha_ * vocab_size));
            }
        };
        add_text(input);
        if (paired != nullptr) add_text(*paired);
        log_posts.push_back(lp);
    }

    double max_lp = log_posts[0];
    for (double lp : log_posts) max_lp = std::max(max_lp, lp);
    double sum = 0.0;
    for (double& lp : log_posts) {
        lp = std::exp(lp - max_lp);
        sum += lp;
    }
    LabelDistribution dist;
    for (std::size_t i = 0; i < label_order_.size(); ++i) {
        dist.probs[label_order_[i]] = log_posts[i] / sum;
    }
    return dist;
}

double NaiveBayesVictim::accuracy(const text::Dataset& data) const {
    if (data.examples.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& ex : data.examples) {
        const text::TokenizedText* paired = ex.text_b ? &*ex.text_b : nullptr;
        if (argmax_label(predict(ex.text_a, paired), label_order_) == ex.gold_label) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(data.examples.size());
}

// Tab-separated fields; labels are arbitrary strings and may contain spaces.
void NaiveBayesVictim::save(const std::filesystem::path& path) const {
    if (!trained_) throw std::runtime_error("model not trained");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path.string());
    out << "maskfill-nb\t1\n";
    out << "alpha\t" << util::fmt_double(alpha_) << "\n";
    out << "labels\t" << label_order_.size() << "\n";
    for (const auto& label : label_order_) {
        out << label << '\t' << doc_counts_.at(label) << "\n";
    }
    std::size_t rows = 0;
    for (const auto& [_, inner] : token_counts_) rows += inner.size();
    out << "counts\t" << rows << "\n";
    for (const auto& [label, inner] : token_counts_) {
        for (const auto& [tok, c] : inner) out << label << '\t' << tok << '\t' << c << "\n";
    }
    if (!out) throw std::runtime_error("failed writing model file: " + path.string());
}

NaiveBayesVictim NaiveBayesVictim::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path.string());

    auto next_fields = [&](std::size_t expected) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("truncated model file: " + path.string());
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() != expected) {
            throw std::runtime_error("malformed model file line: " + line);
        }
        return fields;
    };

    auto header = next_fields(2);
    if (header[0] != "maskfill-nb" || header[1] != "1") {
        throw std::runtime_error("not a maskfill naive Bayes model: " + path.string());
    }

    NaiveBayesVictim model;
    auto alpha_line = next_fields(2);
    if (alpha_line[0] != "alpha") throw std::runtime_error("malformed model file (alpha)");
    model.alpha_ = util::parse_double(alpha_line[1]);

    auto labels_line = next_fields(2);
    if (labels_line[0] != "labels") throw std::runtime_error("malformed model file (labels)");
    std::size_t n_labels = std::stoull(labels_line[1]);
    for (std::size_t i = 0; i < n_labels; ++i) {
        auto row = next_fields(2);
        model.label_order_.push_back(row[0]);
        model.doc_counts_[row[0]] = std::stoull(row[1]);
        model.token_totals_[row[0]] = 0;
        model.token_counts_[row[0]];
    }

    auto counts_line = next_fields(2);
    if (counts_line[0] != "counts") throw std::runtime_error("malformed model file (counts)");
    std::size_t rows = std::stoull(counts_line[1]);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row = next_fields(3);
        std::uint64_t c = std::stoull(row[2]);
        model.token_counts_[row[0]][row[1]] = c;
        model.token_totals_[row[0]] += c;
        model.vocab_.insert(row[1]);
    }
    model.trained_ = true;
    return model;
}

} // namespace maskfill::models
