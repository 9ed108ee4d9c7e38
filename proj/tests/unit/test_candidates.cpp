#include <doctest.h>

#include <cmath>
#include <random>

#include "maskfill/perturb/action.hpp"
#include "maskfill/perturb/candidates.hpp"
#include "maskfill/perturb/mask.hpp"
#include "maskfill/util/hash.hpp"
#include "support/stub_models.hpp"

using namespace maskfill;
using namespace maskfill::testsupport;
using models::EditKind;
using perturb::CandidateFilterConfig;
using perturb::CandidateSet;

namespace {

std::set<std::string> member_tokens(const CandidateSet& z) {
    std::set<std::string> out;
    for (const auto& c : z.members) out.insert(c.token);
    return out;
}

// Similarity keyed off the candidate token's hash, in [0, 1].
FnSimilarity hashed_similarity() {
    return FnSimilarity([](const text::TokenizedText& a, const text::TokenizedText& b,
                           std::optional<models::SimilarityScorer::Window>) {
        std::uint64_t h = 0;
        for (const auto& t : a.tokens) h = util::mix(h, util::fnv1a(t.surface));
        for (const auto& t : b.tokens) h = util::mix(h, util::fnv1a(t.surface));
        return static_cast<double>(h % 1000) / 999.0;
    });
}

} // namespace

TEST_CASE("default thresholds match the attack contract") {
    CandidateFilterConfig cfg;
    CHECK(cfg.mlm_threshold == 5e-3);
    CHECK(cfg.sim_threshold == 0.7);
    CHECK(cfg.window == 15);
    CHECK(cfg.mlm_sample_size == 200);
}

TEST_CASE("thresholds and the original-token exclusion") {
    FnMlm mlm = fixed_mlm({{"good", 0.5}, {"great", 0.4}, {"bad", 0.1}});
    FnSimilarity sim = constant_similarity(0.9);
    text::TokenizedText x = text::tokenize("the movie is good");
    models::MaskedContext ctx = perturb::mask_replace(x, 3);

    CandidateFilterConfig cfg;
    cfg.mlm_threshold = 0.2;
    cfg.sim_threshold = 0.7;
    CandidateSet z = perturb::build_candidate_set(ctx, x, mlm, sim, cfg);
    CHECK(member_tokens(z) == std::set<std::string>{"great"});
    REQUIRE(z.members.size() == 1);
    CHECK(z.members[0].mlm_prob == doctest::Approx(0.4));
    CHECK(z.members[0].local_sim == doctest::Approx(0.9));
}

TEST_CASE("an unreachable threshold empties the set") {
    FnMlm mlm = fixed_mlm({{"a", 0.6}, {"b", 0.4}});
    FnSimilarity sim = constant_similarity(1.0);
    text::TokenizedText x = text::tokenize("p q");
    CandidateFilterConfig cfg;
    cfg.mlm_threshold = 1.0;
    CandidateSet z = perturb::build_candidate_set(perturb::mask_insert(x, 0), x, mlm, sim, cfg);
    CHECK(z.empty());
}

TEST_CASE("insert and merge fills are not excluded for matching a surface") {
    FnMlm mlm = fixed_mlm({{"York", 0.9}, {"town", 0.1}});
    FnSimilarity sim = constant_similarity(0.95);
    text::TokenizedText x = text::tokenize("New York");
    CandidateFilterConfig cfg;
    cfg.mlm_threshold = 0.05;
    CandidateSet z = perturb::build_candidate_set(perturb::mask_merge(x, 0), x, mlm, sim, cfg);
    CHECK(member_tokens(z).count("York") == 1); // deletion-like merge fill is legal
}

TEST_CASE("filter soundness holds post hoc under random stubs") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 50; ++round) {
        std::map<std::string, double> probs;
        for (int t = 0; t < 30; ++t) {
            probs["w" + std::to_string(t)] = static_cast<double>(rng() % 1000) / 999.0;
        }
        FnMlm mlm = fixed_mlm(probs);
        FnSimilarity sim = hashed_similarity();
        text::TokenizedText x = text::tokenize("w1 w2 w3 w4 w5");
        CandidateFilterConfig cfg;
        cfg.mlm_threshold = static_cast<double>(rng() % 100) / 100.0;
        cfg.sim_threshold = static_cast<double>(rng() % 100) / 100.0;
        cfg.window = 3;

        models::MaskedContext ctx = rng() % 2 == 0
                                        ? perturb::mask_replace(x, rng() % x.size())
                                        : perturb::mask_insert(x, rng() % x.size());
        CandidateSet z = perturb::build_candidate_set(ctx, x, mlm, sim, cfg);
        for (const auto& cand : z.members) {
            CHECK(cand.mlm_prob > cfg.mlm_threshold);
            CHECK(cand.local_sim > cfg.sim_threshold);
            // Re-check the similarity value against a fresh computation.
            text::TokenizedText applied =
                perturb::apply_edit(x, ctx.kind, ctx.origin_position, cand.token);
            double again = sim.score(
                x, applied, models::SimilarityScorer::Window{cfg.window, ctx.origin_position});
            CHECK(cand.local_sim == doctest::Approx(again));
        }
    }
}

TEST_CASE("set equals a brute-force enumeration of the vocabulary") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 20; ++round) {
        std::map<std::string, double> probs;
        for (int t = 0; t < 50; ++t) {
            probs["tok" + std::to_string(t)] = static_cast<double>(rng() % 1000) / 999.0;
        }
        FnMlm mlm = fixed_mlm(probs);
        FnSimilarity sim = hashed_similarity();
        text::TokenizedText x = text::tokenize("tok1 tok2 tok3 tok4");
        std::size_t pos = rng() % x.size();
        models::MaskedContext ctx = perturb::mask_replace(x, pos);
        CandidateFilterConfig cfg;
        cfg.mlm_threshold = 0.3;
        cfg.sim_threshold = 0.4;
        cfg.window = 15;

        CandidateSet z = perturb::build_candidate_set(ctx, x, mlm, sim, cfg);

        std::set<std::string> oracle;
        for (const auto& [tok, p] : probs) {
            if (p <= cfg.mlm_threshold) continue;
            if (tok == x.surface(pos)) continue;
            text::TokenizedText applied = perturb::apply_edit(x, EditKind::Replace, pos, tok);
            double s = sim.score(x, applied, models::SimilarityScorer::Window{cfg.window, pos});
            if (s > cfg.sim_threshold) oracle.insert(tok);
        }
        CHECK(member_tokens(z) == oracle);
    }
}

TEST_CASE("ablations: dropping the similarity filter only grows the set") {
    std::map<std::string, double> probs;
    for (int t = 0; t < 40; ++t) probs["v" + std::to_string(t)] = 0.9 / (1 + t % 7);
    FnMlm mlm = fixed_mlm(probs);
    FnSimilarity sim = hashed_similarity();
    text::TokenizedText x = text::tokenize("v1 v2 v3");
    models::MaskedContext ctx = perturb::mask_replace(x, 1);

    CandidateFilterConfig base;
    base.mlm_threshold = 0.1;
    base.sim_threshold = 0.5;
    CandidateSet with_sim = perturb::build_candidate_set(ctx, x, mlm, sim, base);

    CandidateFilterConfig ablated = base;
    ablated.disable_sim_filter = true;
    CandidateSet without_sim = perturb::build_candidate_set(ctx, x, mlm, sim, ablated);

    std::set<std::string> small = member_tokens(with_sim);
    std::set<std::string> big = member_tokens(without_sim);
    for (const auto& tok : small) CHECK(big.count(tok) == 1);
    for (const auto& cand : without_sim.members) CHECK(std::isnan(cand.local_sim));
}

TEST_CASE("ablations: a larger k keeps a subset") {
    std::map<std::string, double> probs;
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        probs["u" + std::to_string(t)] = static_cast<double>(rng() % 1000) / 999.0;
    }
    FnMlm mlm = fixed_mlm(probs);
    FnSimilarity sim = constant_similarity(0.9);
    text::TokenizedText x = text::tokenize("u1 u2");
    models::MaskedContext ctx = perturb::mask_insert(x, 0);

    CandidateFilterConfig lo;
    lo.mlm_threshold = 0.1;
    CandidateFilterConfig hi = lo;
    hi.mlm_threshold = 0.4;
    std::set<std::string> big = member_tokens(perturb::build_candidate_set(ctx, x, mlm, sim, lo));
    std::set<std::string> small = member_tokens(perturb::build_candidate_set(ctx, x, mlm, sim, hi));
    CHECK(small.size() < big.size());
    for (const auto& tok : small) CHECK(big.count(tok) == 1);
}

TEST_CASE("ablations: without the MLM filter exactly 200 tokens are sampled") {
    std::map<std::string, double> probs;
    for (int t = 0; t < 300; ++t) probs["t" + std::to_string(t)] = 1.0 / 300.0;
    FnMlm mlm = fixed_mlm(probs);
    FnSimilarity sim = constant_similarity(1.0);
    text::TokenizedText x = text::tokenize("t1 t2 t3");
    models::MaskedContext ctx = perturb::mask_insert(x, 1);

    CandidateFilterConfig cfg;
    cfg.disable_mlm_filter = true;
    cfg.disable_sim_filter = true; // expose the raw sample
    cfg.seed = 4;
    CandidateSet z = perturb::build_candidate_set(ctx, x, mlm, sim, cfg);
    CHECK(z.members.size() == 200);
    CHECK(member_tokens(z).size() == 200); // without replacement

    CandidateSet again = perturb::build_candidate_set(ctx, x, mlm, sim, cfg);
    CHECK(member_tokens(again) == member_tokens(z));

    CandidateFilterConfig other_seed = cfg;
    other_seed.seed = 5;
    CandidateSet different = perturb::build_candidate_set(ctx, x, mlm, sim, other_seed);
    CHECK(member_tokens(different) != member_tokens(z));

    // Fewer vocabulary entries than the sample size: take them all.
    FnMlm tiny = fixed_mlm({{"a", 0.5}, {"b", 0.5}});
    CandidateSet all = perturb::build_candidate_set(ctx, x, tiny, sim, cfg);
    CHECK(all.members.size() == 2);
}

TEST_CASE("select_fill minimizes the gold probability with pinned tie-breaks") {
    text::TokenizedText x = text::tokenize("the movie is good");
    models::MaskedContext ctx = perturb::mask_replace(x, 3);

    auto victim_with = [&](std::map<std::string, double> gold_by_fill) {
        return FnVictim(
            [gold_by_fill = std::move(gold_by_fill)](const text::TokenizedText& input,
                                                     const text::TokenizedText*) {
                models::LabelDistribution d;
                double gold = 0.5;
                auto it = gold_by_fill.find(input.surface(3));
                if (it != gold_by_fill.end()) gold = it->second;
                d.probs["gold"] = gold;
                d.probs["other"] = 1.0 - gold;
                return d;
            },
            {"gold", "other"});
    };

    SUBCASE("empty set gives no fill") {
        CandidateSet z;
        z.ctx = ctx;
        FnVictim victim = victim_with({});
        CHECK_FALSE(perturb::select_fill(z, x, "gold", victim).has_value());
    }

    SUBCASE("minimum gold probability wins") {
        CandidateSet z;
        z.ctx = ctx;
        z.members = {{"great", 0.4, 0.9}, {"decent", 0.3, 0.9}};
        FnVictim victim = victim_with({{"great", 0.3}, {"decent", 0.9}});
        auto fill = perturb::select_fill(z, x, "gold", victim);
        REQUIRE(fill.has_value());
        CHECK(fill->token == "great");
        CHECK(fill->gold_prob == doctest::Approx(0.3));
    }

    SUBCASE("singleton set returns its member") {
        CandidateSet z;
        z.ctx = ctx;
        z.members = {{"solo", 0.2, 0.8}};
        FnVictim victim = victim_with({{"solo", 0.6}});
        auto fill = perturb::select_fill(z, x, "gold", victim);
        REQUIRE(fill.has_value());
        CHECK(fill->token == "solo");
    }

    SUBCASE("gold ties break on mlm probability, then token order") {
        CandidateSet z;
        z.ctx = ctx;
        z.members = {{"alpha", 0.2, 0.9}, {"beta", 0.6, 0.9}, {"gamma", 0.6, 0.9}};
        FnVictim victim = victim_with({{"alpha", 0.4}, {"beta", 0.4}, {"gamma", 0.4}});
        auto fill = perturb::select_fill(z, x, "gold", victim);
        REQUIRE(fill.has_value());
        CHECK(fill->token == "beta"); // highest mlm prob; beta < gamma lexicographically
    }
}

TEST_CASE("select_fill's winner never loses to another member by enumeration") {
    std::mt19937_64 rng(61);
    text::TokenizedText x = text::tokenize("q r s t");
    for (int round = 0; round < 50; ++round) {
        models::MaskedContext ctx = perturb::mask_replace(x, rng() % x.size());
        CandidateSet z;
        z.ctx = ctx;
        std::size_t members = 1 + rng() % 12;
        for (std::size_t m = 0; m < members; ++m) {
            z.members.push_back({"fill" + std::to_string(m),
                                 static_cast<double>(rng() % 100) / 100.0, 0.9});
        }
        // Gold probability keyed off the fill token's hash.
        FnVictim victim(
            [&](const text::TokenizedText& input, const text::TokenizedText*) {
                models::LabelDistribution d;
                double gold =
                    static_cast<double>(util::fnv1a(input.surface(ctx.origin_position)) % 997) /
                    996.0;
                d.probs["gold"] = gold;
                d.probs["other"] = 1.0 - gold;
                return d;
            },
            {"gold", "other"});

        auto fill = perturb::select_fill(z, x, "gold", victim);
        REQUIRE(fill.has_value());
        for (const auto& member : z.members) {
            text::TokenizedText applied =
                perturb::apply_edit(x, ctx.kind, ctx.origin_position, member.token);
            CHECK(fill->gold_prob <= victim.predict(applied, nullptr).probs.at("gold"));
        }
    }
}
