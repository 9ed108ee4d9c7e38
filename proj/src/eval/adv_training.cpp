#include "maskfill/eval/adv_training.hpp"

#include <iomanip>
#include <sstream>

#include "maskfill/eval/augment.hpp"
#include "maskfill/models/naive_bayes.hpp"

namespace maskfill::eval {

AdvTrainingOutcome adversarial_training_experiment(const text::Dataset& train,
                                                   const text::Dataset& test,
                                                   const models::ModelSet& base_models,
                                                   const engine::AttackConfig& config,
                                                   double alpha, std::size_t workers) {
    AdvTrainingOutcome outcome;

    auto measure = [&](const std::shared_ptr<const models::NaiveBayesVictim>& victim,
                       std::optional<double>& a_rate, std::optional<double>& mod,
                       std::optional<double>& mod_count) {
        models::ModelSet stack = base_models;
        stack.victim = victim;
        std::vector<engine::AttackResult> results =
            engine::attack_dataset(test, stack, config, workers);
        MetricsReport report = aggregate(results, stack.perplexity.get(), stack.grammar.get(),
                                         stack.similarity.get());
        a_rate = report.a_rate;
        mod = report.mod_rate;
        if (report.n_success > 0) {
            double count_sum = 0.0;
            for (const auto& r : results) {
                if (r.success) count_sum += modification_count(r);
            }
            mod_count = count_sum / static_cast<double>(report.n_success);
        }
    };

    auto before = std::make_shared<models::NaiveBayesVictim>(
        models::NaiveBayesVictim::train(train, alpha));
    outcome.clean_acc_before = before->accuracy(test);
    measure(before, outcome.a_rate_before, outcome.mod_before, outcome.mod_count_before);

    models::ModelSet attack_stack = base_models;
    attack_stack.victim = before;
    std::vector<engine::AttackResult> train_results =
        engine::attack_dataset(train, attack_stack, config, workers);
    text::Dataset augmented = augment_dataset(train, train_results);
    outcome.augmentation_size = augmented.examples.size() - train.examples.size();

    auto after = std::make_shared<models::NaiveBayesVictim>(
        models::NaiveBayesVictim::train(augmented, alpha));
    outcome.clean_acc_after = after->accuracy(test);
    measure(after, outcome.a_rate_after, outcome.mod_after, outcome.mod_count_after);

    return outcome;
}

void print_adv_training(std::ostream& out, const AdvTrainingOutcome& outcome) {
    auto fmt = [](const std::optional<double>& v) {
        if (!v.has_value()) return std::string("-");
        std::ostringstream s;
        s << std::fixed << std::setprecision(4) << *v;
        return s.str();
    };
    out << std::fixed << std::setprecision(4);
    out << "victim            acc     a_rate  mod\n";
    out << "clean             " << outcome.clean_acc_before << "  " << fmt(outcome.a_rate_before)
        << "  " << fmt(outcome.mod_before) << "\n";
    out << "+ adversarial     " << outcome.clean_acc_after << "  " << fmt(outcome.a_rate_after)
        << "  " << fmt(outcome.mod_after) << "\n";
    auto delta = [&](double a, double b) {
        std::ostringstream s;
        s << std::showpos << std::fixed << std::setprecision(4) << (b - a);
        return s.str();
    };
    out << "delta             " << delta(outcome.clean_acc_before, outcome.clean_acc_after);
    if (outcome.a_rate_before && outcome.a_rate_after) {
        out << "  " << delta(*outcome.a_rate_before, *outcome.a_rate_after);
    }
    if (outcome.mod_before && outcome.mod_after) {
        out << "  " << delta(*outcome.mod_before, *outcome.mod_after);
    }
    out << "\n";
    out.unsetf(std::ios::fixed);
}

} // namespace maskfill::eval
