#include "maskfill/cli/run_config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "maskfill/models/grammar.hpp"
#include "maskfill/models/naive_bayes.hpp"
#include "maskfill/models/ngram_lm.hpp"
#include "maskfill/models/pos_tagger.hpp"
#include "maskfill/models/remote.hpp"
#include "maskfill/models/similarity.hpp"
#include "maskfill/util/num.hpp"

namespace maskfill::cli {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = s.find(',', start);
        std::string part = trimmed(comma == std::string::npos ? s.substr(start)
                                                              : s.substr(start, comma - start));
        if (!part.empty()) parts.push_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

class Issues {
public:
    void add(const std::string& issue) { issues_.push_back(issue); }
    bool empty() const { return issues_.empty(); }
    [[noreturn]] void raise(const std::filesystem::path& path) const {
        std::string message = "invalid config " + path.string() + ":";
        for (const auto& i : issues_) message += "\n  - " + i;
        throw ConfigError(message);
    }

private:
    std::vector<std::string> issues_;
};

} // namespace

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());

    RunConfig cfg;
    Issues issues;

    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            issues.add("line " + std::to_string(line_no) + ": expected 'key = value'");
            continue;
        }
        std::string key = trimmed(t.substr(0, eq));
        std::string value = trimmed(t.substr(eq + 1));
        if (values.count(key)) {
            issues.add("duplicate key '" + key + "'");
            continue;
        }
        values[key] = value;
    }

    auto take = [&](const char* key) -> std::string* {
        auto it = values.find(key);
        if (it == values.end()) return nullptr;
        return &it->second;
    };
    auto parse_bool = [&](const char* key, bool& out) {
        if (const std::string* v = take(key)) {
            if (*v == "true" || *v == "1") {
                out = true;
            } else if (*v == "false" || *v == "0") {
                out = false;
            } else {
                issues.add(std::string(key) + ": expected true/false, got '" + *v + "'");
            }
            values.erase(key);
        }
    };
    auto parse_size = [&](const char* key, std::size_t& out) {
        if (const std::string* v = take(key)) {
            try {
                out = std::stoull(*v);
            } catch (...) {
                issues.add(std::string(key) + ": expected a non-negative integer, got '" + *v + "'");
            }
            values.erase(key);
        }
    };
    auto parse_int = [&](const char* key, int& out) {
        if (const std::string* v = take(key)) {
            try {
                out = std::stoi(*v);
            } catch (...) {
                issues.add(std::string(key) + ": expected an integer, got '" + *v + "'");
            }
            values.erase(key);
        }
    };
    auto parse_double = [&](const char* key, double& out) {
        if (const std::string* v = take(key)) {
            try {
                out = util::parse_double(*v);
            } catch (...) {
                issues.add(std::string(key) + ": expected a number, got '" + *v + "'");
            }
            values.erase(key);
        }
    };
    auto parse_string = [&](const char* key, std::string& out) {
        if (const std::string* v = take(key)) {
            out = *v;
            values.erase(key);
        }
    };

    parse_string("dataset", cfg.dataset);
    if (const std::string* v = take("dataset_format")) {
        if (*v == "jsonl") {
            cfg.dataset_format = text::DatasetFormat::Jsonl;
        } else if (*v == "tsv") {
            cfg.dataset_format = text::DatasetFormat::Tsv;
        } else {
            issues.add("dataset_format: expected jsonl or tsv, got '" + *v + "'");
        }
        values.erase("dataset_format");
    }
    parse_string("text_field", cfg.schema.text_field);
    parse_string("text_b_field", cfg.schema.text_b_field);
    parse_string("label_field", cfg.schema.label_field);
    if (const std::string* v = take("labels")) {
        cfg.schema.fixed_labels = split_list(*v);
        values.erase("labels");
    }
    parse_size("sample_n", cfg.sample_n);
    parse_size("sample_max_len", cfg.sample_max_len);

    parse_string("victim_model", cfg.victim_model);
    parse_string("victim_url", cfg.victim_url);
    parse_string("mlm_model", cfg.mlm_model);
    parse_string("mlm_url", cfg.mlm_url);
    parse_string("vectors", cfg.vectors);
    parse_string("similarity_url", cfg.similarity_url);
    parse_string("perplexity_url", cfg.perplexity_url);
    parse_string("grammar_url", cfg.grammar_url);
    parse_string("pos_url", cfg.pos_url);
    parse_int("timeout_ms", cfg.timeout_ms);
    parse_int("retries", cfg.retries);

    parse_double("k", cfg.attack.mlm_threshold);
    parse_double("l", cfg.attack.sim_threshold);
    {
        std::size_t t = 0;
        bool present = values.count("t") != 0;
        parse_size("t", t);
        if (present && t > 0) cfg.attack.max_steps = t;
    }
    parse_size("window", cfg.attack.window);
    if (const std::string* v = take("actions")) {
        std::set<models::EditKind> actions;
        for (const std::string& name : split_list(*v)) {
            try {
                actions.insert(models::edit_kind_from_string(name));
            } catch (const std::invalid_argument&) {
                issues.add("actions: unknown action '" + name + "'");
            }
        }
        if (actions.empty()) issues.add("actions: at least one of replace,insert,merge required");
        cfg.attack.enabled_actions = std::move(actions);
        values.erase("actions");
    }
    parse_bool("disable_sim_filter", cfg.attack.disable_sim_filter);
    parse_bool("disable_mlm_filter", cfg.attack.disable_mlm_filter);
    parse_size("mlm_sample_size", cfg.attack.mlm_sample_size);
    parse_bool("np_gate", cfg.attack.np_gate);
    parse_bool("attack_punct", cfg.attack.attack_punct);
    {
        std::size_t seed = cfg.attack.seed;
        parse_size("seed", seed);
        cfg.attack.seed = seed;
    }
    parse_size("workers", cfg.workers);

    parse_string("out_trace", cfg.out_trace);
    parse_string("out_metrics", cfg.out_metrics);
    parse_string("out_csv", cfg.out_csv);
    parse_string("out_augmented", cfg.out_augmented);

    for (const auto& [key, _] : values) issues.add("unknown key '" + key + "'");

    // Referenced inputs must exist and each role may have one source.
    auto check_file = [&](const char* key, const std::string& value) {
        if (!value.empty() && !std::filesystem::exists(value)) {
            issues.add(std::string(key) + ": file does not exist: " + value);
        }
    };
    check_file("dataset", cfg.dataset);
    check_file("victim_model", cfg.victim_model);
    check_file("mlm_model", cfg.mlm_model);
    check_file("vectors", cfg.vectors);
    if (!cfg.victim_model.empty() && !cfg.victim_url.empty()) {
        issues.add("victim_model and victim_url are mutually exclusive");
    }
    if (!cfg.mlm_model.empty() && !cfg.mlm_url.empty()) {
        issues.add("mlm_model and mlm_url are mutually exclusive");
    }
    if (!cfg.vectors.empty() && !cfg.similarity_url.empty()) {
        issues.add("vectors and similarity_url are mutually exclusive");
    }
    if (cfg.workers < 1) issues.add("workers must be >= 1");

    if (!issues.empty()) issues.raise(path);
    return cfg;
}

models::ModelSet RunConfig::build_models() const {
    models::ModelSet stack;
    models::ModelEndpoint endpoint;
    endpoint.timeout = std::chrono::milliseconds(timeout_ms);
    endpoint.retries = retries;
    auto at = [&](const std::string& url) {
        models::ModelEndpoint e = endpoint;
        e.base_url = url;
        return e;
    };

    if (!victim_url.empty()) {
        stack.victim = std::make_shared<models::RemoteVictim>(at(victim_url));
    } else if (!victim_model.empty()) {
        stack.victim =
            std::make_shared<models::NaiveBayesVictim>(models::NaiveBayesVictim::load(victim_model));
    } else {
        throw ConfigError("no victim source: set victim_model or victim_url");
    }

    std::shared_ptr<models::ReferenceNgramLm> local_lm;
    if (!mlm_url.empty()) {
        stack.mlm = std::make_shared<models::RemoteMlm>(at(mlm_url));
    } else if (!mlm_model.empty()) {
        local_lm = std::make_shared<models::ReferenceNgramLm>(models::ReferenceNgramLm::load(mlm_model));
        stack.mlm = local_lm;
    } else {
        throw ConfigError("no masked-language-model source: set mlm_model or mlm_url");
    }

    if (!similarity_url.empty()) {
        stack.similarity = std::make_shared<models::RemoteSimilarity>(at(similarity_url));
    } else if (!vectors.empty()) {
        stack.similarity =
            std::make_shared<models::WordVecSimilarity>(models::WordVecSimilarity::from_file(vectors));
    } else {
        stack.similarity = std::make_shared<models::WordVecSimilarity>();
    }

    if (!perplexity_url.empty()) {
        stack.perplexity = std::make_shared<models::RemotePerplexity>(at(perplexity_url));
    } else if (local_lm != nullptr) {
        stack.perplexity = local_lm;
    } else {
        throw ConfigError("no perplexity source: set mlm_model or perplexity_url");
    }

    if (!grammar_url.empty()) {
        stack.grammar = std::make_shared<models::RemoteGrammar>(at(grammar_url));
    } else {
        stack.grammar = std::make_shared<models::RuleGrammarChecker>();
    }

    if (!pos_url.empty()) {
        stack.pos = std::make_shared<models::RemotePosTagger>(at(pos_url));
    } else {
        stack.pos = std::make_shared<models::LexiconPosTagger>();
    }
    return stack;
}

text::Dataset RunConfig::load_configured_dataset() const {
    if (dataset.empty()) throw ConfigError("no dataset configured");
    text::Dataset ds = text::load_dataset(dataset, dataset_format, schema);
    if (sample_n > 0) {
        ds = text::sample_eval_subset(ds, sample_n, sample_max_len, attack.seed);
    }
    return ds;
}

} // namespace maskfill::cli
