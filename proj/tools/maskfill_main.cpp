#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maskfill/cli/commands.hpp"

namespace {

void add_schema_options(CLI::App* cmd, maskfill::text::DatasetSchema& schema) {
    cmd->add_option("--text-field", schema.text_field, "record field holding the text");
    cmd->add_option("--text-b-field", schema.text_b_field,
                    "second text field for pair tasks (empty = single-text)");
    cmd->add_option("--label-field", schema.label_field, "record field holding the label");
    cmd->add_option("--labels", schema.fixed_labels, "fixed label set (otherwise inferred)")
        ->delimiter(',');
}

struct OverrideFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<std::string> out;

    maskfill::cli::CommonOverrides to_overrides() const { return {seed, workers, out}; }
};

void add_common_flags(CLI::App* cmd, OverrideFlags& flags) {
    cmd->add_option("--seed", flags.seed, "override the config seed");
    cmd->add_option("--workers", flags.workers, "override the worker count");
    cmd->add_option("--out", flags.out, "override the command's primary output path");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mask-then-infill adversarial attack toolkit"};
    app.require_subcommand(1);

    // --seed and --workers are accepted on every command for interface
    // uniformity; training is deterministic and single-threaded, so they
    // have no effect there.
    std::uint64_t unused_seed = 0;
    std::size_t unused_workers = 0;
    auto add_uniform_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", unused_seed, "accepted for interface uniformity");
        cmd->add_option("--workers", unused_workers, "accepted for interface uniformity");
    };

    maskfill::cli::TrainVictimOptions victim_opts;
    CLI::App* train_victim = app.add_subcommand("train-victim", "train the reference classifier");
    train_victim->add_option("--train", victim_opts.train_path, "training dataset")->required();
    train_victim->add_option("--format", victim_opts.format, "jsonl or tsv");
    add_schema_options(train_victim, victim_opts.schema);
    train_victim->add_option("--out", victim_opts.out_path, "model output path")->required();
    train_victim->add_option("--alpha", victim_opts.alpha, "additive smoothing");
    train_victim->add_option("--eval", victim_opts.eval_path, "optional split to report accuracy on");
    add_uniform_flags(train_victim);

    maskfill::cli::TrainMlmOptions mlm_opts;
    CLI::App* train_mlm = app.add_subcommand("train-mlm", "train the reference infill model");
    train_mlm->add_option("--corpus", mlm_opts.corpus_path, "corpus file")->required();
    train_mlm->add_option("--format", mlm_opts.format, "raw, jsonl or tsv");
    add_schema_options(train_mlm, mlm_opts.schema);
    train_mlm->add_option("--out", mlm_opts.out_path, "model output path")->required();
    train_mlm->add_option("--delta", mlm_opts.delta, "additive smoothing");
    train_mlm->add_option("--order", mlm_opts.order, "ngram order (1-3)");
    add_uniform_flags(train_mlm);

    std::string attack_config;
    OverrideFlags attack_flags;
    CLI::App* attack = app.add_subcommand("attack", "attack a dataset and report metrics");
    attack->add_option("--config", attack_config, "run config file")->required();
    add_common_flags(attack, attack_flags);

    std::string sweep_config;
    std::string grid_spec;
    OverrideFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "threshold trade-off sweep over a (k,l) grid");
    sweep->add_option("--config", sweep_config, "run config file")->required();
    sweep->add_option("--grid", grid_spec, "grid spec, e.g. \"k=0.001,0.005;l=0.5,0.7\"")->required();
    add_common_flags(sweep, sweep_flags);

    std::string augment_config;
    OverrideFlags augment_flags;
    CLI::App* augment = app.add_subcommand("augment", "attack a training set and export it augmented");
    augment->add_option("--config", augment_config, "run config file")->required();
    add_common_flags(augment, augment_flags);

    std::string trace_path;
    OverrideFlags analyze_flags;
    CLI::App* analyze = app.add_subcommand("analyze-pos", "tag breakdown of a trace file");
    analyze->add_option("--trace", trace_path, "trace jsonl file")->required();
    add_common_flags(analyze, analyze_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (train_victim->parsed()) return maskfill::cli::cmd_train_victim(victim_opts);
    if (train_mlm->parsed()) return maskfill::cli::cmd_train_mlm(mlm_opts);
    if (attack->parsed()) return maskfill::cli::cmd_attack(attack_config, attack_flags.to_overrides());
    if (sweep->parsed()) {
        return maskfill::cli::cmd_sweep(sweep_config, grid_spec, sweep_flags.to_overrides());
    }
    if (augment->parsed()) {
        return maskfill::cli::cmd_augment(augment_config, augment_flags.to_overrides());
    }
    if (analyze->parsed()) {
        return maskfill::cli::cmd_analyze_pos(trace_path, analyze_flags.to_overrides());
    }
    return 2;
}
