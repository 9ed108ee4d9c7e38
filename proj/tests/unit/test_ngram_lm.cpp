#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "maskfill/models/ngram_lm.hpp"
#include "support/temp_dir.hpp"

using namespace maskfill;
using models::MaskedContext;
using models::ReferenceNgramLm;

namespace {

std::vector<text::TokenizedText> corpus_of(const std::vector<std::string>& sentences) {
    std::vector<text::TokenizedText> out;
    for (const auto& s : sentences) out.push_back(text::tokenize(s));
    return out;
}

MaskedContext ctx_of(const std::vector<std::string>& left, const std::vector<std::string>& right,
                     models::EditKind kind = models::EditKind::Replace) {
    MaskedContext ctx;
    ctx.kind = kind;
    for (const auto& s : left) ctx.left.push_back(text::Token::of(s));
    for (const auto& s : right) ctx.right.push_back(text::Token::of(s));
    ctx.origin_position = left.size();
    return ctx;
}

double sum_probs(const models::VocabDistribution& d) {
    double s = 0.0;
    for (const auto& [_, p] : d.probs) s += p;
    return s;
}

} // namespace

TEST_CASE("untrained model refuses to predict") {
    ReferenceNgramLm lm;
    CHECK_THROWS_WITH_AS(lm.predict(ctx_of({"a"}, {})), doctest::Contains("not trained"),
                         std::runtime_error);
    CHECK_THROWS_AS(lm.perplexity(text::tokenize("a")), std::runtime_error);
}

TEST_CASE("training rejects an empty corpus") {
    CHECK_THROWS_AS(ReferenceNgramLm::train(corpus_of({}), 3, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ReferenceNgramLm::train(corpus_of({""}), 3, 0.1), std::invalid_argument);
}

TEST_CASE("vocabulary is corpus tokens plus the two boundary symbols") {
    ReferenceNgramLm lm = ReferenceNgramLm::train(corpus_of({"a b c"}), 3, 0.1);
    CHECK(lm.vocab_size() == 5);
    std::vector<std::string> vocab = lm.vocabulary();
    CHECK(std::count(vocab.begin(), vocab.end(), "<s>") == 1);
    CHECK(std::count(vocab.begin(), vocab.end(), "</s>") == 1);
}

TEST_CASE("masking the middle of the only sentence recovers it") {
    // Hand-computed on corpus {"a b c"}, delta = 0.01, |V| = 5:
    // forward (<s>, a) and backward (c, </s>) each saw only b once, so
    // score(b) = (1.01/1.05)^2 and every other token gets (0.01/1.05)^2.
    ReferenceNgramLm lm = ReferenceNgramLm::train(corpus_of({"a b c"}), 3, 0.01);
    models::VocabDistribution d = lm.predict(ctx_of({"a"}, {"c"}));

    double expected_b = (1.01 * 1.01) / (1.01 * 1.01 + 4 * 0.01 * 0.01);
    CHECK(d.probs.at("b") == doctest::Approx(expected_b).epsilon(1e-12));
    auto best = std::max_element(d.probs.begin(), d.probs.end(),
                                 [](const auto& x, const auto& y) { return x.second < y.second; });
    CHECK(best->first == "b");
    CHECK(sum_probs(d) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a one-sided insert context spreads mass over the observed successors") {
    // Hand-computed on corpus {"a b c", "a b d"}, delta = 0.1, |V| = 6:
    // forward (a, b) saw c and d once each, so each gets 1.1/2.6 and the
    // other four tokens 0.1/2.6; with no right context that is the whole
    // score.
    ReferenceNgramLm lm = ReferenceNgramLm::train(corpus_of({"a b c", "a b d"}), 3, 0.1);
    models::VocabDistribution d = lm.predict(ctx_of({"a", "b"}, {}, models::EditKind::Insert));

    CHECK(d.probs.at("c") == doctest::Approx(1.1 / 2.6).epsilon(1e-12));
    CHECK(d.probs.at("c") == doctest::Approx(d.probs.at("d")).epsilon(1e-12));
    CHECK(d.probs.at("c") + d.probs.at("d") > 0.8);
    CHECK(sum_probs(d) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("no context on either side gives the smoothed unigram distribution") {
    ReferenceNgramLm lm = ReferenceNgramLm::train(corpus_of({"a b c"}), 3, 0.5);
    models::VocabDistribution d = lm.predict(ctx_of({}, {}));
    // unigram counts are 1 each over 3 tokens; |V| = 5.
    CHECK(d.probs.at("a") == doctest::Approx(1.5 / 5.5).epsilon(1e-12));
    CHECK(d.probs.at("<s>") == doctest::Approx(0.5 / 5.5).epsilon(1e-12));
    CHECK(sum_probs(d) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("delta = 0 with an unseen context falls back to the unigram factor") {
    ReferenceNgramLm lm = ReferenceNgramLm::train(corpus_of({"a b c"}), 3, 0.0);
    models::VocabDistribution d = lm.predict(ctx_of({"q", "z"}, {}));
    CHECK(d.probs.at("a") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(d.probs.at("b") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(d.probs.at("<s>") == doctest::Approx(0.0));
    CHECK(sum_probs(d) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("distributions sum to one across context shapes") {
    ReferenceNgramLm lm = ReferenceNgramLm::train(
        corpus_of({"the movie was very good", "the film was quite bad", "a plot felt dull"}), 3,
        0.2);
    for (const auto& ctx :
         {ctx_of({"the"}, {"was"}), ctx_of({}, {"movie", "was"}), ctx_of({"was", "very"}, {}),
          ctx_of({"unseen", "words"}, {"also", "unseen"}, models::EditKind::Merge)}) {
        CHECK(sum_probs(lm.predict(ctx)) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("more observations of a fill never lower its probability") {
    std::vector<std::string> base = {"x y a", "x y b"};
    ReferenceNgramLm before = ReferenceNgramLm::train(corpus_of(base), 3, 0.3);
    double p_before = before.predict(ctx_of({"x", "y"}, {})).probs.at("a");
    for (int extra = 1; extra <= 3; ++extra) {
        std::vector<std::string> grown = base;
        for (int i = 0; i < extra; ++i) grown.push_back("x y a");
        ReferenceNgramLm after = ReferenceNgramLm::train(corpus_of(grown), 3, 0.3);
        double p_after = after.predict(ctx_of({"x", "y"}, {})).probs.at("a");
        CHECK(p_after >= p_before);
        p_before = p_after;
    }
}

TEST_CASE("save/load round trip preserves predictions and bytes") {
    testsupport::TempDir dir;
    ReferenceNgramLm lm =
        ReferenceNgramLm::train(corpus_of({"the movie was good", "the plot was bad"}), 3, 0.05);
    auto path = dir.file("model.lm");
    lm.save(path);
    ReferenceNgramLm loaded = ReferenceNgramLm::load(path);

    MaskedContext ctx = ctx_of({"the"}, {"was"});
    models::VocabDistribution a = lm.predict(ctx);
    models::VocabDistribution b = loaded.predict(ctx);
    REQUIRE(a.probs.size() == b.probs.size());
    for (const auto& [tok, p] : a.probs) CHECK(b.probs.at(tok) == doctest::Approx(p).epsilon(1e-15));
    CHECK(loaded.vocab_size() == lm.vocab_size());

    auto path2 = dir.file("model2.lm");
    loaded.save(path2);
    CHECK(testsupport::read_file(path) == testsupport::read_file(path2));
}

TEST_CASE("perplexity: training sentences beat their shuffles") {
    std::vector<std::string> sentences = {
        "the movie was very good", "the film was quite bad", "this story felt truly dull",
        "the dinner was really fine", "this game seemed quite weak"};
    ReferenceNgramLm lm = ReferenceNgramLm::train(corpus_of(sentences), 3, 0.1);

    text::TokenizedText original = text::tokenize("the movie was very good");
    double trained_ppl = lm.perplexity(original);

    std::mt19937_64 rng(123);
    double shuffled_sum = 0.0;
    for (int i = 0; i < 20; ++i) {
        text::TokenizedText shuffled = original;
        for (std::size_t j = shuffled.size(); j > 1; --j) {
            std::swap(shuffled.tokens[j - 1], shuffled.tokens[rng() % j]);
        }
        shuffled_sum += lm.perplexity(shuffled);
    }
    CHECK(trained_ppl < shuffled_sum / 20.0);
}

TEST_CASE("perplexity closed forms on order-1 models") {
    // Uniform model over eight tokens: every in-vocabulary text scores 8.
    ReferenceNgramLm uniform = ReferenceNgramLm::train(corpus_of({"a b c d e f g h"}), 1, 0.0);
    CHECK(uniform.perplexity(text::tokenize("a b a h")) == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(uniform.perplexity(text::tokenize("h")) == doctest::Approx(8.0).epsilon(1e-9));

    // Single token with unigram probability 1/4.
    ReferenceNgramLm quarter = ReferenceNgramLm::train(corpus_of({"a b c d"}), 1, 0.0);
    CHECK(quarter.perplexity(text::tokenize("a")) == doctest::Approx(4.0).epsilon(1e-9));

    CHECK_THROWS_AS(uniform.perplexity(text::TokenizedText{}), std::invalid_argument);
}
