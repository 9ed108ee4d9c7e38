#include "maskfill/models/similarity.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace maskfill::models {

namespace {

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

double jaccard(const text::TokenizedText& a, const text::TokenizedText& b) {
    std::set<std::string> sa;
    std::set<std::string> sb;
    for (const auto& t : a.tokens) sa.insert(lowercased(t.surface));
    for (const auto& t : b.tokens) sb.insert(lowercased(t.surface));
    if (sa.empty() && sb.empty()) return 1.0;
    std::size_t inter = 0;
    for (const auto& s : sa) {
        if (sb.count(s)) ++inter;
    }
    std::size_t uni = sa.size() + sb.size() - inter;
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

} // namespace

WordVecSimilarity WordVecSimilarity::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word-vector file: " + path.string());
    std::map<std::string, std::vector<double>> vectors;
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string word;
        row >> word;
        std::vector<double> vec;
        double v = 0.0;
        while (row >> v) vec.push_back(v);
        if (vec.empty()) {
            throw std::runtime_error(path.string() + ": line " + std::to_string(line_no) +
                                     ": no vector components");
        }
        if (dim == 0) {
            dim = vec.size();
        } else if (vec.size() != dim) {
            throw std::runtime_error(path.string() + ": line " + std::to_string(line_no) +
                                     ": dimension " + std::to_string(vec.size()) + " != " +
                                     std::to_string(dim));
        }
        vectors[word] = std::move(vec);
    }
    return from_vectors(std::move(vectors));
}

WordVecSimilarity WordVecSimilarity::from_vectors(std::map<std::string, std::vector<double>> vectors) {
    WordVecSimilarity sim;
    for (const auto& [word, vec] : vectors) {
        if (sim.dim_ == 0) {
            sim.dim_ = vec.size();
        } else if (vec.size() != sim.dim_) {
            throw std::invalid_argument("inconsistent vector dimension for word '" + word + "'");
        }
    }
    sim.vectors_ = std::move(vectors);
    return sim;
}

double WordVecSimilarity::score(const text::TokenizedText& a, const text::TokenizedText& b,
                                std::optional<Window> window) const {
    text::TokenizedText ca = a;
    text::TokenizedText cb = b;
    if (window.has_value()) {
        ca = crop_window(a, window->center, window->size);
        cb = crop_window(b, window->center, window->size);
    }
    if (ca.empty() && cb.empty()) return 1.0;
    if (ca.empty() || cb.empty()) return 0.0;

    auto mean_vector = [&](const text::TokenizedText& t, std::vector<double>& out) -> bool {
        out.assign(dim_, 0.0);
        std::size_t found = 0;
        for (const auto& tok : t.tokens) {
            auto it = vectors_.find(tok.surface);
            if (it == vectors_.end()) it = vectors_.find(lowercased(tok.surface));
            if (it == vectors_.end()) continue;
            for (std::size_t d = 0; d < dim_; ++d) out[d] += it->second[d];
            ++found;
        }
        if (found == 0) return false;
        for (double& v : out) v /= static_cast<double>(found);
        return true;
    };

    std::vector<double> va;
    std::vector<double> vb;
    if (dim_ == 0 || !mean_vector(ca, va) || !mean_vector(cb, vb)) {
        return jaccard(ca, cb);
    }
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
        dot += va[d] * vb[d];
        na += va[d] * va[d];
        nb += vb[d] * vb[d];
    }
    if (na < 1e-24 || nb < 1e-24) return jaccard(ca, cb);
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

} // namespace maskfill::models
