#pragma once

#include <optional>
#include <ostream>

#include "maskfill/engine/attack.hpp"
#include "maskfill/eval/metrics.hpp"
#include "maskfill/text/dataset.hpp"

namespace maskfill::eval {

// Before/after comparison of a retrainable victim: clean accuracy, attack
// success rate and mean modification rate on the test set, measured once
// for the victim trained on clean data and once after retraining on the
// clean data plus its successful adversarial examples.
struct AdvTrainingOutcome {
    double clean_acc_before = 0.0;
    double clean_acc_after = 0.0;
    std::optional<double> a_rate_before;
    std::optional<double> a_rate_after;
    std::optional<double> mod_before; // mean modification rate over successes
    std::optional<double> mod_after;
    std::optional<double> mod_count_before; // mean modification count over successes
    std::optional<double> mod_count_after;
    std::size_t augmentation_size = 0; // adversarial examples added
};

// Trains the reference victim on `train`, attacks `test`, regenerates
// adversarial examples for `train` itself, retrains on the augmented set
// and re-attacks `test` with the retrained victim. base_models supplies
// everything except the victim, which this experiment owns.
AdvTrainingOutcome adversarial_training_experiment(const text::Dataset& train,
                                                   const text::Dataset& test,
                                                   const models::ModelSet& base_models,
                                                   const engine::AttackConfig& config,
                                                   double alpha = 1.0, std::size_t workers = 1);

void print_adv_training(std::ostream& out, const AdvTrainingOutcome& outcome);

} // namespace maskfill::eval
