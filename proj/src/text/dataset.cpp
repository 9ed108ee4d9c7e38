#include "maskfill/text/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace maskfill::text {

namespace {

std::string lowercased(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

[[noreturn]] void line_error(const std::filesystem::path& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path.string() + ": line " + std::to_string(line) + ": " + what);
}

class LabelRegistry {
public:
    explicit LabelRegistry(const std::vector<std::string>& fixed) : fixed_(!fixed.empty()) {
        for (const auto& l : fixed) add(l);
    }

    void observe(const std::string& label, const std::filesystem::path& path, std::size_t line) {
        if (seen_.count(label)) return;
        if (fixed_) line_error(path, line, "unknown label '" + label + "'");
        add(label);
    }

    std::vector<std::string> labels() const { return ordered_; }

private:
    void add(const std::string& label) {
        if (seen_.insert(label).second) ordered_.push_back(label);
    }

    bool fixed_;
    std::unordered_set<std::string> seen_;
    std::vector<std::string> ordered_;
};

Dataset load_jsonl(const std::filesystem::path& path, std::ifstream& in, const DatasetSchema& schema) {
    Dataset ds;
    ds.task_kind = schema.text_b_field.empty() ? TaskKind::SingleText : TaskKind::TextPair;
    LabelRegistry registry(schema.fixed_labels);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded()) line_error(path, line_no, "malformed JSON");
        if (!record.is_object()) line_error(path, line_no, "record is not an object");

        auto fetch = [&](const std::string& field) -> std::string {
            if (!record.contains(field)) line_error(path, line_no, "missing field '" + field + "'");
            const auto& v = record.at(field);
            if (!v.is_string()) line_error(path, line_no, "field '" + field + "' is not a string");
            return v.get<std::string>();
        };

        LabeledExample ex;
        ex.text_a = tokenize(fetch(schema.text_field));
        if (ds.task_kind == TaskKind::TextPair) ex.text_b = tokenize(fetch(schema.text_b_field));
        ex.gold_label = fetch(schema.label_field);
        registry.observe(ex.gold_label, path, line_no);
        ds.examples.push_back(std::move(ex));
    }
    ds.label_set = registry.labels();
    return ds;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

Dataset load_tsv(const std::filesystem::path& path, std::ifstream& in, const DatasetSchema& schema) {
    Dataset ds;
    ds.task_kind = schema.text_b_field.empty() ? TaskKind::SingleText : TaskKind::TextPair;
    LabelRegistry registry(schema.fixed_labels);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": missing tsv header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_tabs(line);
    std::unordered_map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < header.size(); ++i) columns[header[i]] = i;

    auto column_of = [&](const std::string& field) {
        auto it = columns.find(field);
        if (it == columns.end()) {
            throw std::runtime_error(path.string() + ": header has no column '" + field + "'");
        }
        return it->second;
    };
    std::size_t text_col = column_of(schema.text_field);
    std::size_t label_col = column_of(schema.label_field);
    std::size_t text_b_col = ds.task_kind == TaskKind::TextPair ? column_of(schema.text_b_field) : 0;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells = split_tabs(line);
        if (cells.size() != header.size()) {
            line_error(path, line_no, "expected " + std::to_string(header.size()) + " columns, got " +
                                          std::to_string(cells.size()));
        }
        LabeledExample ex;
        ex.text_a = tokenize(cells[text_col]);
        if (ds.task_kind == TaskKind::TextPair) ex.text_b = tokenize(cells[text_b_col]);
        ex.gold_label = cells[label_col];
        registry.observe(ex.gold_label, path, line_no);
        ds.examples.push_back(std::move(ex));
    }
    ds.label_set = registry.labels();
    return ds;
}

} // namespace

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format, const DatasetSchema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path.string());
    Dataset ds = format == DatasetFormat::Jsonl ? load_jsonl(path, in, schema) : load_tsv(path, in, schema);
    return ds;
}

AttackTarget select_attack_target(const LabeledExample& example) {
    if (!example.text_b.has_value()) {
        throw std::invalid_argument("select_attack_target requires a text-pair example");
    }
    AttackTarget target;
    target.use_text_b = example.text_b->size() > example.text_a.size();
    const TokenizedText& attacked = target.use_text_b ? *example.text_b : example.text_a;
    const TokenizedText& other = target.use_text_b ? example.text_a : *example.text_b;

    std::unordered_set<std::string> other_surfaces;
    for (const auto& t : other.tokens) other_surfaces.insert(lowercased(t.surface));
    for (std::size_t i = 0; i < attacked.size(); ++i) {
        if (other_surfaces.count(lowercased(attacked.surface(i)))) target.frozen.insert(i);
    }
    return target;
}

const TokenizedText& attacked_text(const LabeledExample& example) {
    if (!example.text_b.has_value()) return example.text_a;
    return select_attack_target(example).use_text_b ? *example.text_b : example.text_a;
}

Dataset sample_eval_subset(const Dataset& dataset, std::size_t n, std::size_t max_len, std::uint64_t seed) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < dataset.examples.size(); ++i) {
        if (attacked_text(dataset.examples[i]).size() <= max_len) eligible.push_back(i);
    }

    // Partial Fisher-Yates; std::shuffle's algorithm is not pinned by the
    // standard, so the draw is spelled out for cross-platform determinism.
    std::mt19937_64 rng(seed);
    std::size_t take = std::min(n, eligible.size());
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (eligible.size() - i));
        std::swap(eligible[i], eligible[j]);
    }
    eligible.resize(take);
    std::sort(eligible.begin(), eligible.end());

    Dataset out;
    out.label_set = dataset.label_set;
    out.task_kind = dataset.task_kind;
    out.examples.reserve(take);
    for (std::size_t idx : eligible) out.examples.push_back(dataset.examples[idx]);
    return out;
}

} // namespace maskfill::text
