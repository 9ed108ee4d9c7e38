#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maskfill/text/dataset.hpp"
#include "maskfill/util/hash.hpp"

// Lexicon-generated two-class sentiment corpus for desk-scale experiments.
// Sentences follow a handful of templates over shared determiners, nouns,
// verbs and adverbs; the label is carried entirely by the adjective class,
// so a trigram infill model trained on the corpus proposes both classes'
// adjectives in adjective slots and a naive Bayes victim is attackable by
// swapping them.
namespace maskfill::testsupport {

inline const std::vector<std::string>& synth_determiners() {
    static const std::vector<std::string> v = {"the", "this"};
    return v;
}
inline const std::vector<std::string>& synth_nouns() {
    static const std::vector<std::string> v = {"movie",  "film",  "show",   "story", "plot",
                                               "dinner", "actor", "song",   "game",  "book",
                                               "staff",  "place", "pizza",  "coffee", "room"};
    return v;
}
inline const std::vector<std::string>& synth_verbs() {
    static const std::vector<std::string> v = {"was", "seemed", "felt", "looked"};
    return v;
}
inline const std::vector<std::string>& synth_adverbs() {
    static const std::vector<std::string> v = {"very", "really", "quite", "truly"};
    return v;
}
inline const std::vector<std::string>& synth_pos_adjectives() {
    static const std::vector<std::string> v = {"good",    "great",   "fine",     "lovely",
                                               "solid",   "superb",  "charming", "pleasant",
                                               "delightful", "excellent"};
    return v;
}
inline const std::vector<std::string>& synth_neg_adjectives() {
    static const std::vector<std::string> v = {"bad",      "poor",     "awful",   "dull",
                                               "weak",     "boring",   "dreadful", "terrible",
                                               "horrible", "sloppy"};
    return v;
}

struct SyntheticData {
    text::Dataset train;
    text::Dataset test;
    std::vector<text::TokenizedText> lm_corpus; // the training texts
    std::map<std::string, std::vector<double>> vectors;
};

inline text::LabeledExample synth_example(std::mt19937_64& rng, bool positive) {
    auto pick = [&](const std::vector<std::string>& pool) {
        return pool[static_cast<std::size_t>(rng() % pool.size())];
    };
    const auto& adjectives = positive ? synth_pos_adjectives() : synth_neg_adjectives();

    std::ostringstream s;
    switch (rng() % 4) {
        case 0:
            s << pick(synth_determiners()) << ' ' << pick(synth_nouns()) << ' '
              << pick(synth_verbs()) << ' ' << pick(synth_adverbs()) << ' ' << pick(adjectives);
            break;
        case 1:
            s << pick(synth_determiners()) << ' ' << pick(synth_nouns()) << ' '
              << pick(synth_verbs()) << ' ' << pick(adjectives);
            break;
        case 2:
            s << pick(synth_determiners()) << ' ' << pick(synth_nouns()) << ' '
              << pick(synth_verbs()) << ' ' << pick(synth_adverbs()) << ' ' << pick(adjectives)
              << " and " << pick(synth_adverbs()) << ' ' << pick(adjectives);
            break;
        default:
            s << pick(synth_determiners()) << ' ' << pick(synth_nouns()) << " and "
              << pick(synth_determiners()) << ' ' << pick(synth_nouns()) << ' '
              << pick(synth_verbs()) << ' ' << pick(adjectives);
            break;
    }
    text::LabeledExample ex;
    ex.text_a = text::tokenize(s.str());
    ex.gold_label = positive ? "pos" : "neg";
    return ex;
}

inline text::Dataset synth_dataset(std::uint64_t seed, std::size_t size) {
    std::mt19937_64 rng(seed);
    text::Dataset ds;
    ds.label_set = {"pos", "neg"};
    ds.task_kind = text::TaskKind::SingleText;
    ds.examples.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        ds.examples.push_back(synth_example(rng, i % 2 == 0));
    }
    return ds;
}

// Word vectors: a shared base direction plus a per-word pseudo-random
// offset. The base keeps whole-text similarities high while single-token
// edits still move the score enough for the l threshold to bite.
inline std::map<std::string, std::vector<double>> synth_vectors() {
    constexpr std::size_t dim = 16;
    constexpr double base_scale = 0.3;
    std::map<std::string, std::vector<double>> vectors;
    auto add_pool = [&](const std::vector<std::string>& pool) {
        for (const auto& word : pool) {
            std::mt19937_64 rng(util::fnv1a(word));
            std::normal_distribution<double> noise(0.0, 0.25);
            std::vector<double> v(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                v[d] = noise(rng) + (d == 0 ? base_scale : 0.0);
            }
            vectors[word] = std::move(v);
        }
    };
    add_pool(synth_determiners());
    add_pool(synth_nouns());
    add_pool(synth_verbs());
    add_pool(synth_adverbs());
    add_pool(synth_pos_adjectives());
    add_pool(synth_neg_adjectives());
    add_pool({"and"});
    return vectors;
}

inline SyntheticData make_synthetic(std::uint64_t seed, std::size_t n_train, std::size_t n_test) {
    SyntheticData data;
    data.train = synth_dataset(seed, n_train);
    data.test = synth_dataset(util::mix(seed, 0x7e57), n_test);
    for (const auto& ex : data.train.examples) data.lm_corpus.push_back(ex.text_a);
    data.vectors = synth_vectors();
    return data;
}

// Variant for the adversarial-training experiment. Every sentence carries
// more sentiment adjectives than the attack budget can remove, and the word
// vectors give adjectives a class-aligned component so that cross-class
// fills fail a tight similarity window unless they come from a small
// "leaky" subset with a damped component. Augmentation can then poison the
// leaky fills without touching the rest of the signal.
inline const std::vector<std::string>& defense_pos_adjectives() {
    static const std::vector<std::string> v = {"good",   "great",  "fine",   "lovely", "solid",
                                               "superb", "charming", "pleasant", "delightful",
                                               "excellent", "graceful", "stellar"};
    return v;
}
inline const std::vector<std::string>& defense_neg_adjectives() {
    static const std::vector<std::string> v = {"bad",      "poor",     "awful",    "dull",
                                               "weak",     "boring",   "dreadful", "terrible",
                                               "horrible", "sloppy",   "shabby",   "dismal"};
    return v;
}
// The two leading adjectives of each class are the leaky ones.
inline bool defense_is_leaky(const std::string& word) {
    return word == "good" || word == "great" || word == "bad" || word == "poor";
}

inline text::LabeledExample defense_example(std::mt19937_64& rng, bool positive) {
    auto pick = [&](const std::vector<std::string>& pool) {
        return pool[static_cast<std::size_t>(rng() % pool.size())];
    };
    const auto& adjectives = positive ? defense_pos_adjectives() : defense_neg_adjectives();
    std::size_t n_adj = 3 + rng() % 2;
    std::vector<std::string> chosen;
    while (chosen.size() < n_adj) {
        std::string a = pick(adjectives);
        bool seen = false;
        for (const auto& c : chosen) {
            if (c == a) seen = true;
        }
        if (!seen) chosen.push_back(a);
    }
    // Adjectives sit in class-neutral "and ADV _" contexts so the infill
    // model proposes both classes' adjectives at every slot.
    std::ostringstream s;
    s << pick(synth_determiners()) << ' ' << pick(synth_nouns()) << ' ' << pick(synth_verbs());
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        s << (i == 0 ? " " : " and ") << pick(synth_adverbs()) << ' ' << chosen[i];
    }
    text::LabeledExample ex;
    ex.text_a = text::tokenize(s.str());
    ex.gold_label = positive ? "pos" : "neg";
    return ex;
}

inline text::Dataset defense_dataset(std::uint64_t seed, std::size_t size) {
    std::mt19937_64 rng(seed);
    text::Dataset ds;
    ds.label_set = {"pos", "neg"};
    ds.task_kind = text::TaskKind::SingleText;
    ds.examples.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        ds.examples.push_back(defense_example(rng, i % 2 == 0));
    }
    return ds;
}

inline std::map<std::string, std::vector<double>> defense_vectors() {
    constexpr std::size_t dim = 16;
    constexpr double base_scale = 0.3;
    constexpr double class_scale = 2.5;
    std::map<std::string, std::vector<double>> vectors;
    auto add_pool = [&](const std::vector<std::string>& pool, double class_component) {
        for (const auto& word : pool) {
            std::mt19937_64 rng(util::fnv1a(word));
            std::normal_distribution<double> noise(0.0, 0.25);
            std::vector<double> v(dim);
            for (std::size_t d = 0; d < dim; ++d) v[d] = noise(rng);
            v[0] += base_scale;
            // Leaky adjectives carry no class component, so they pass the
            // similarity window in either direction.
            if (!defense_is_leaky(word)) v[1] += class_component;
            vectors[word] = std::move(v);
        }
    };
    add_pool(synth_determiners(), 0.0);
    add_pool(synth_nouns(), 0.0);
    add_pool(synth_verbs(), 0.0);
    add_pool(synth_adverbs(), 0.0);
    add_pool({"and"}, 0.0);
    add_pool(defense_pos_adjectives(), class_scale);
    add_pool(defense_neg_adjectives(), -class_scale);
    return vectors;
}

inline SyntheticData make_defense_synthetic(std::uint64_t seed, std::size_t n_train,
                                            std::size_t n_test) {
    SyntheticData data;
    data.train = defense_dataset(seed, n_train);
    data.test = defense_dataset(util::mix(seed, 0xdef), n_test);
    for (const auto& ex : data.train.examples) data.lm_corpus.push_back(ex.text_a);
    data.vectors = defense_vectors();
    return data;
}

inline std::string dataset_as_jsonl(const text::Dataset& ds) {
    std::ostringstream out;
    for (const auto& ex : ds.examples) {
        // Fields are plain words; hand-rolled JSON keeps this header-only.
        out << R"({"text":")" << text::detokenize(ex.text_a) << R"(","label":")" << ex.gold_label
            << "\"}\n";
    }
    return out.str();
}

inline std::string corpus_as_text(const std::vector<text::TokenizedText>& corpus) {
    std::ostringstream out;
    for (const auto& t : corpus) out << text::detokenize(t) << "\n";
    return out.str();
}

inline std::string vectors_as_text(const std::map<std::string, std::vector<double>>& vectors) {
    std::ostringstream out;
    for (const auto& [word, vec] : vectors) {
        out << word;
        for (double v : vec) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

} // namespace maskfill::testsupport
