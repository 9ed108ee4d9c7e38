#include "maskfill/cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "maskfill/cli/run_config.hpp"
#include "maskfill/engine/attack.hpp"
#include "maskfill/engine/trace.hpp"
#include "maskfill/eval/augment.hpp"
#include "maskfill/eval/metrics.hpp"
#include "maskfill/eval/pos_breakdown.hpp"
#include "maskfill/eval/sweep.hpp"
#include "maskfill/models/naive_bayes.hpp"
#include "maskfill/models/ngram_lm.hpp"
#include "maskfill/models/pos_tagger.hpp"
#include "maskfill/util/num.hpp"

namespace maskfill::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

text::DatasetFormat parse_format(const std::string& name) {
    if (name == "jsonl") return text::DatasetFormat::Jsonl;
    if (name == "tsv") return text::DatasetFormat::Tsv;
    throw ConfigError("unknown dataset format '" + name + "' (expected jsonl or tsv)");
}

std::vector<text::TokenizedText> load_raw_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open corpus file: " + path);
    std::vector<text::TokenizedText> corpus;
    std::string line;
    while (std::getline(in, line)) {
        text::TokenizedText t = text::tokenize(line);
        if (!t.empty()) corpus.push_back(std::move(t));
    }
    return corpus;
}

std::string metric_cell(const std::optional<double>& v) {
    if (!v.has_value()) return "-";
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << *v;
    return s.str();
}

void print_summary(const eval::MetricsReport& report) {
    std::cout << "A-rate\tMod\tPPL\tGErr\tSim\n";
    std::cout << metric_cell(report.a_rate) << '\t' << metric_cell(report.mod_rate) << '\t'
              << metric_cell(report.ppl) << '\t' << metric_cell(report.gerr) << '\t'
              << metric_cell(report.sim) << "\n";
    std::cout << "examples=" << report.n_total << " skipped=" << report.n_skipped
              << " successes=" << report.n_success << "\n";
}

RunConfig load_with_overrides(const std::string& config_path, const CommonOverrides& overrides) {
    RunConfig cfg = RunConfig::load(config_path);
    if (overrides.seed.has_value()) cfg.attack.seed = *overrides.seed;
    if (overrides.workers.has_value()) cfg.workers = std::max<std::size_t>(1, *overrides.workers);
    return cfg;
}

// Grid spec: "k=0.001,0.005;l=0.5,0.7".
void parse_grid(const std::string& spec, std::vector<double>& ks, std::vector<double>& ls) {
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t semi = spec.find(';', start);
        std::string part = semi == std::string::npos ? spec.substr(start)
                                                     : spec.substr(start, semi - start);
        if (!part.empty()) {
            std::size_t eq = part.find('=');
            if (eq == std::string::npos) throw ConfigError("grid: expected name=v1,v2 in '" + part + "'");
            std::string name = part.substr(0, eq);
            std::vector<double>* out = nullptr;
            if (name == "k") {
                out = &ks;
            } else if (name == "l") {
                out = &ls;
            } else {
                throw ConfigError("grid: unknown parameter '" + name + "' (expected k or l)");
            }
            std::string list = part.substr(eq + 1);
            std::size_t s = 0;
            for (;;) {
                std::size_t comma = list.find(',', s);
                std::string cell = comma == std::string::npos ? list.substr(s)
                                                              : list.substr(s, comma - s);
                if (!cell.empty()) {
                    try {
                        out->push_back(util::parse_double(cell));
                    } catch (const std::exception&) {
                        throw ConfigError("grid: not a number: '" + cell + "'");
                    }
                }
                if (comma == std::string::npos) break;
                s = comma + 1;
            }
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (ks.empty() || ls.empty()) throw ConfigError("grid: both k and l value lists are required");
}

int usage_error(const std::exception& e) {
    std::cerr << "maskfill: " << e.what() << "\n";
    return kExitUsage;
}

int runtime_error_exit(const std::exception& e) {
    std::cerr << "maskfill: " << e.what() << "\n";
    return kExitRuntime;
}

} // namespace

int cmd_train_victim(const TrainVictimOptions& options) {
    text::Dataset train;
    try {
        train = text::load_dataset(options.train_path, parse_format(options.format), options.schema);
    } catch (const std::exception& e) {
        return usage_error(e);
    }
    try {
        models::NaiveBayesVictim victim = models::NaiveBayesVictim::train(train, options.alpha);
        victim.save(options.out_path);
        std::cout << "labels=" << victim.labels().size() << " examples=" << train.size() << "\n";
        if (!options.eval_path.empty()) {
            text::Dataset eval_split =
                text::load_dataset(options.eval_path, parse_format(options.format), options.schema);
            std::cout << "accuracy=" << std::fixed << std::setprecision(4)
                      << victim.accuracy(eval_split) << "\n";
        }
        models::NaiveBayesVictim::load(options.out_path); // output must parse back
    } catch (const std::invalid_argument& e) {
        return usage_error(e);
    } catch (const std::exception& e) {
        return runtime_error_exit(e);
    }
    return kExitOk;
}

int cmd_train_mlm(const TrainMlmOptions& options) {
    std::vector<text::TokenizedText> corpus;
    try {
        if (options.format == "raw") {
            corpus = load_raw_corpus(options.corpus_path);
        } else {
            text::Dataset ds =
                text::load_dataset(options.corpus_path, parse_format(options.format), options.schema);
            for (const auto& ex : ds.examples) {
                corpus.push_back(ex.text_a);
                if (ex.text_b) corpus.push_back(*ex.text_b);
            }
        }
    } catch (const std::exception& e) {
        return usage_error(e);
    }
    try {
        models::ReferenceNgramLm lm =
            models::ReferenceNgramLm::train(corpus, options.order, options.delta);
        lm.save(options.out_path);
        std::cout << "vocab_size=" << lm.vocab_size() << " sentences=" << corpus.size() << "\n";
        models::ReferenceNgramLm::load(options.out_path);
    } catch (const std::invalid_argument& e) {
        return usage_error(e);
    } catch (const std::exception& e) {
        return runtime_error_exit(e);
    }
    return kExitOk;
}

int cmd_attack(const std::string& config_path, const CommonOverrides& overrides) {
    RunConfig cfg;
    models::ModelSet stack;
    text::Dataset dataset;
    try {
        cfg = load_with_overrides(config_path, overrides);
        if (overrides.out.has_value()) cfg.out_trace = *overrides.out;
        stack = cfg.build_models();
        dataset = cfg.load_configured_dataset();
    } catch (const std::exception& e) {
        return usage_error(e);
    }
    try {
        std::vector<engine::AttackResult> results =
            engine::attack_dataset(dataset, stack, cfg.attack, cfg.workers);
        engine::write_trace(cfg.out_trace, results);
        eval::MetricsReport report = eval::aggregate(results, stack.perplexity.get(),
                                                     stack.grammar.get(), stack.similarity.get());
        {
            std::ofstream out(cfg.out_metrics);
            if (!out) throw std::runtime_error("cannot write metrics file: " + cfg.out_metrics);
            out << eval::report_to_json(report).dump(2) << "\n";
        }
        print_summary(report);

        // Outputs must parse back cleanly for the exit code to be 0.
        engine::read_trace(cfg.out_trace);
        std::ifstream metrics_in(cfg.out_metrics);
        nlohmann::json parsed = nlohmann::json::parse(metrics_in, nullptr, false);
        if (parsed.is_discarded()) throw std::runtime_error("metrics file failed to re-parse");
        eval::report_from_json(parsed);
    } catch (const std::exception& e) {
        return runtime_error_exit(e);
    }
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_spec,
              const CommonOverrides& overrides) {
    RunConfig cfg;
    models::ModelSet stack;
    text::Dataset dataset;
    std::vector<double> ks;
    std::vector<double> ls;
    try {
        cfg = load_with_overrides(config_path, overrides);
        if (overrides.out.has_value()) cfg.out_csv = *overrides.out;
        parse_grid(grid_spec, ks, ls);
        stack = cfg.build_models();
        dataset = cfg.load_configured_dataset();
    } catch (const std::exception& e) {
        return usage_error(e);
    }
    try {
        std::vector<eval::SweepPoint> points =
            eval::sweep(dataset, stack, cfg.attack, ks, ls, cfg.workers);
        eval::write_sweep_csv(cfg.out_csv, points);
        std::cout << "cells=" << points.size() << " csv=" << cfg.out_csv << "\n";
        if (eval::read_sweep_csv(cfg.out_csv).size() != points.size()) {
            throw std::runtime_error("sweep csv failed to re-parse");
        }
    } catch (const std::exception& e) {
        return runtime_error_exit(e);
    }
    return kExitOk;
}

int cmd_augment(const std::string& config_path, const CommonOverrides& overrides) {
    RunConfig cfg;
    models::ModelSet stack;
    text::Dataset dataset;
    try {
        cfg = load_with_overrides(config_path, overrides);
        if (overrides.out.has_value()) cfg.out_augmented = *overrides.out;
        stack = cfg.build_models();
        dataset = cfg.load_configured_dataset();
    } catch (const std::exception& e) {
        return usage_error(e);
    }
    try {
        std::vector<engine::AttackResult> results =
            engine::attack_dataset(dataset, stack, cfg.attack, cfg.workers);
        eval::export_augmented(cfg.out_augmented, dataset, results, cfg.schema);
        std::size_t successes = 0;
        for (const auto& r : results) {
            if (r.success) ++successes;
        }
        std::cout << "originals=" << dataset.size() << " adversarial=" << successes
                  << " out=" << cfg.out_augmented << "\n";
        text::Dataset reread = text::load_dataset(cfg.out_augmented, text::DatasetFormat::Jsonl,
                                                  cfg.schema);
        if (reread.size() != dataset.size() + successes) {
            throw std::runtime_error("augmented dataset failed to re-parse");
        }
    } catch (const std::exception& e) {
        return runtime_error_exit(e);
    }
    return kExitOk;
}

int cmd_analyze_pos(const std::string& trace_path, const CommonOverrides& overrides) {
    std::vector<engine::AttackResult> results;
    try {
        results = engine::read_trace(trace_path);
    } catch (const std::exception& e) {
        return usage_error(e);
    }
    models::LexiconPosTagger tagger;
    eval::PosBreakdown breakdown = eval::pos_breakdown(results, tagger);
    eval::print_pos_breakdown(std::cout, breakdown);
    if (overrides.out.has_value()) {
        std::ofstream out(*overrides.out);
        if (!out) {
            std::cerr << "maskfill: cannot write " << *overrides.out << "\n";
            return kExitRuntime;
        }
        eval::print_pos_breakdown(out, breakdown);
    }
    return kExitOk;
}

} // namespace maskfill::cli
