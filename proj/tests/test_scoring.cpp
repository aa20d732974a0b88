#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "agfsync/core/error.hpp"
#include "agfsync/core/score_math.hpp"
#include "agfsync/core/text.hpp"
#include "agfsync/gen/blob_store.hpp"
#include "agfsync/scoring/grid_search.hpp"
#include "agfsync/scoring/scoring_engine.hpp"
#include "agfsync/testkit/mocks.hpp"

using namespace agfsync;
using namespace agfsync::scoring;
using core::QAPair;
namespace fs = std::filesystem;

namespace {

std::vector<QAPair> make_questions(int n) {
    std::vector<QAPair> pairs;
    for (int i = 1; i <= n; ++i) {
        pairs.push_back({i, "Is there item " + std::to_string(i) + "?", "yes",
                         core::ElementType::object, "item", 1});
    }
    return pairs;
}

}  // namespace

TEST_CASE("vqa_score counts normalized yes replies") {
    std::vector<std::uint8_t> image = {1};
    auto questions = make_questions(4);

    VqaFn all_yes = [](const std::vector<std::uint8_t>&, const std::string&) { return "yes"; };
    CHECK(vqa_score(all_yes, image, questions) == 100.0);

    int call = 0;
    VqaFn three_of_four = [&](const std::vector<std::uint8_t>&, const std::string&) {
        return ++call == 2 ? "no" : "Yes, it is.";
    };
    CHECK(vqa_score(three_of_four, image, questions) == 75.0);

    CHECK_THROWS_AS(vqa_score(all_yes, image, {}), Error);
    auto flagged = make_questions(2);
    flagged[1].flag = 0;
    CHECK_THROWS_AS(vqa_score(all_yes, image, flagged), Error);

    // No partial score: a backend failure on any question aborts.
    VqaFn failing = [&](const std::vector<std::uint8_t>&, const std::string& q) -> std::string {
        if (q.find("3") != std::string::npos) raise(ErrorKind::transport, "vqa down");
        return "yes";
    };
    CHECK_THROWS_AS(vqa_score(failing, image, questions), Error);
}

TEST_CASE("vqa_score equals the brute-force indicator sum on mock images") {
    testkit::MockSuite suite;
    std::vector<std::uint8_t> image = suite.mock_t2i(suite.mock_embed_text("a pier"), 3);
    VqaFn vqa = [&](const std::vector<std::uint8_t>& img, const std::string& question) {
        return suite.mock_vqa(img, question);
    };

    for (int n : {1, 4, 7, 13, 32}) {
        auto questions = make_questions(n);
        // Independent oracle: per-question indicator, summed.
        std::size_t matches = 0;
        for (const auto& q : questions) {
            if (core::answer_is_yes(suite.mock_vqa(image, q.question))) ++matches;
        }
        double expected = 100.0 * double(matches) / double(n);
        CHECK(vqa_score(vqa, image, questions) == expected);
    }
}

TEST_CASE("clip_score arithmetic examples") {
    ClipConfig gamma100;
    gateway::Embedding unit_x{{1.0, 0.0}};
    gateway::Embedding unit_y{{0.0, 1.0}};
    gateway::Embedding diag{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}};

    CHECK(clip_score(unit_x, unit_x, gamma100) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(clip_score(unit_x, unit_y, gamma100) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(clip_score(unit_x, diag, gamma100) == doctest::Approx(70.7107).epsilon(1e-4));

    // Negative cosine clamps to zero.
    gateway::Embedding neg_x{{-1.0, 0.0}};
    CHECK(clip_score(unit_x, neg_x, gamma100) == 0.0);

    CHECK_THROWS_AS(clip_score(unit_x, gateway::Embedding{{1.0, 0.0, 0.0}}, gamma100), Error);
    CHECK_THROWS_AS(clip_score(unit_x, gateway::Embedding{{0.0, 0.0}}, gamma100), Error);
    CHECK_THROWS_AS(clip_score(unit_x, unit_x, ClipConfig{0.0}), Error);
}

TEST_CASE("clip_score scale invariance and symmetry") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    ClipConfig config;

    for (int trial = 0; trial < 300; ++trial) {
        gateway::Embedding u, v;
        for (int k = 0; k < 8; ++k) {
            u.values.push_back(coord(gen));
            v.values.push_back(coord(gen));
        }
        double base = clip_score(u, v, config);
        CHECK(clip_score(v, u, config) == doctest::Approx(base).epsilon(1e-12));

        double a = scale(gen), b = scale(gen);
        gateway::Embedding au = u, bv = v;
        for (auto& x : au.values) x *= a;
        for (auto& x : bv.values) x *= b;
        CHECK(clip_score(au, bv, config) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("aesthetic_score rescales by 100") {
    std::vector<std::uint8_t> image = {1};
    AestheticFn fixed = [](const std::vector<std::uint8_t>&) { return 0.479; };
    CHECK(aesthetic_score(fixed, image) == doctest::Approx(47.9).epsilon(1e-12));

    AestheticFn zero = [](const std::vector<std::uint8_t>&) { return 0.0; };
    CHECK(aesthetic_score(zero, image) == 0.0);
    AestheticFn one = [](const std::vector<std::uint8_t>&) { return 1.0; };
    CHECK(aesthetic_score(one, image) == 100.0);
    AestheticFn out_of_range = [](const std::vector<std::uint8_t>&) { return 1.5; };
    CHECK_THROWS_AS(aesthetic_score(out_of_range, image), Error);
}

TEST_CASE("score_candidate is deterministic on mocks and isolates failures") {
    fs::path dir = fs::temp_directory_path() / "agfsync_scoring_test";
    fs::create_directories(dir);
    gen::BlobStore store(dir / "blobs");
    testkit::MockSuite suite(testkit::MockConfig{.embed_dim = 16});

    core::PromptRecord prompt;
    prompt.prompt_id = "p-0001";
    prompt.category = core::Category::plants;
    prompt.text = "An orchid in a misty greenhouse.";
    prompt.word_count = 6;
    prompt.source_model = "test";
    prompt.created_at = "1970-01-01T00:00:00Z";

    auto image = suite.mock_t2i(suite.mock_embed_text(prompt.text), 5);
    core::CandidateImage candidate;
    candidate.candidate_id = "p-0001-c1";
    candidate.prompt_id = "p-0001";
    candidate.seed = 5;
    candidate.noise_sigma = 0.1;
    candidate.image_ref = store.put(image);

    ScoringBackends backends{
        [&](const std::vector<std::uint8_t>& img, const std::string& q) {
            return suite.mock_vqa(img, q);
        },
        [&](const std::string& text) { return suite.mock_embed_text(text); },
        [&](const std::vector<std::uint8_t>& img) { return suite.mock_embed_image(img); },
        [&](const std::vector<std::uint8_t>& img) { return suite.mock_aesthetic(img); },
    };

    auto questions = make_questions(6);
    core::WeightConfig weights;
    auto scored = score_candidate(backends, prompt, questions, candidate, store, weights);
    REQUIRE(scored.scores.has_value());
    REQUIRE(scored.weighted.has_value());
    scored.scores->validate();
    CHECK(*scored.weighted ==
          doctest::Approx(core::weighted_score(*scored.scores, weights)).epsilon(1e-12));

    auto again = score_candidate(backends, prompt, questions, candidate, store, weights);
    CHECK(*again.weighted == *scored.weighted);
    CHECK(again.scores->s_vqa == scored.scores->s_vqa);
    CHECK(again.scores->s_clip == scored.scores->s_clip);
    CHECK(again.scores->s_aes == scored.scores->s_aes);

    // A failing sub-score propagates; the input candidate stays unscored.
    ScoringBackends broken = backends;
    broken.aesthetic = [](const std::vector<std::uint8_t>&) -> double {
        raise(ErrorKind::transport, "aesthetic model down");
    };
    CHECK_THROWS_AS(score_candidate(broken, prompt, questions, candidate, store, weights), Error);
    CHECK_FALSE(candidate.scores.has_value());

    // Missing blob is an error before any backend call.
    core::CandidateImage missing = candidate;
    missing.image_ref = std::string(64, 'e');
    CHECK_THROWS_AS(score_candidate(backends, prompt, questions, missing, store, weights), Error);

    fs::remove_all(dir);
}

TEST_CASE("weight triple enumeration matches hand count and includes the shipped weights") {
    WeightGrid grid;
    auto triples = enumerate_weight_triples(grid);
    // 5 + 6 + 7 + 6 sum-to-1 combinations across the aes levels .2/.15/.1/.05.
    CHECK(triples.size() == 24);

    bool found_default = false;
    for (const auto& triple : triples) {
        CHECK_NOTHROW(core::validate_weights(triple));
        if (std::abs(triple.w_clip - 0.55) < 1e-12 && std::abs(triple.w_vqa - 0.35) < 1e-12 &&
            std::abs(triple.w_aes - 0.1) < 1e-12) {
            found_default = true;
        }
    }
    CHECK(found_default);
}

TEST_CASE("grid_search_weights argmax, singleton, and failure cases") {
    WeightGrid singleton{{0.5}, {0.4}, {0.1}};
    auto best = grid_search_weights(singleton, [](const core::WeightConfig&) { return 1.0; });
    CHECK(best.w_clip == 0.5);
    CHECK(best.w_vqa == 0.4);
    CHECK(best.w_aes == 0.1);

    WeightGrid invalid{{0.5}, {0.6}, {0.2}};  // sums to 1.3
    CHECK_THROWS_AS(grid_search_weights(invalid, [](const core::WeightConfig&) { return 1.0; }),
                    Error);

    // Argmax agrees with exhaustive evaluation of an asymmetric objective.
    WeightGrid grid;
    auto objective = [](const core::WeightConfig& w) {
        return -std::abs(w.w_clip - 0.45) - 2.0 * std::abs(w.w_vqa - 0.4) + 0.5 * w.w_aes;
    };
    auto chosen = grid_search_weights(grid, objective);
    double best_value = -1e9;
    core::WeightConfig expected;
    for (const auto& triple : enumerate_weight_triples(grid)) {
        double value = objective(triple);
        if (value > best_value) {
            best_value = value;
            expected = triple;
        }
    }
    CHECK(chosen.w_clip == expected.w_clip);
    CHECK(chosen.w_vqa == expected.w_vqa);
    CHECK(chosen.w_aes == expected.w_aes);
    CHECK_NOTHROW(core::validate_weights(chosen));

    // Constant objective resolves ties toward the lexicographically largest
    // (w_clip, w_vqa, w_aes).
    auto tied = grid_search_weights(grid, [](const core::WeightConfig&) { return 7.0; });
    CHECK(tied.w_clip == 0.6);
    CHECK(tied.w_vqa == 0.35);
    CHECK(tied.w_aes == doctest::Approx(0.05));
}
