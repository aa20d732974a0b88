#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>

#include "agfsync/core/error.hpp"
#include "agfsync/gen/blob_store.hpp"
#include "agfsync/gen/candidate_generator.hpp"
#include "agfsync/testkit/mocks.hpp"

using namespace agfsync;
using namespace agfsync::gen;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    TempDir() : path(fs::temp_directory_path() / ("agfsync_gen_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path path;
};

core::PromptRecord test_prompt() {
    core::PromptRecord prompt;
    prompt.prompt_id = "p-animals-0001";
    prompt.category = core::Category::animals;
    prompt.text = "A heron standing in shallow water at dawn.";
    prompt.word_count = 8;
    prompt.source_model = "test";
    prompt.created_at = "1970-01-01T00:00:00Z";
    return prompt;
}

}  // namespace

TEST_CASE("blob store round trip, write-once, and lookups") {
    TempDir dir;
    BlobStore store(dir.path / "blobs");

    std::vector<std::uint8_t> payload = {1, 2, 3, 4, 5};
    std::string address = store.put(payload);
    CHECK(address.size() == 64);
    CHECK(store.contains(address));
    CHECK(store.get(address) == payload);
    CHECK(store.put(payload) == address);  // idempotent

    CHECK_FALSE(store.contains(std::string(64, '0')));
    CHECK_THROWS_AS(store.get(std::string(64, '0')), Error);
    CHECK_THROWS_AS(store.get("short"), Error);
}

TEST_CASE("perturb_condition zero-noise and determinism") {
    gateway::Embedding embedding{{0.5, -0.25, 1.0, 0.0}};

    auto same = perturb_condition(embedding, 0.0, 99);
    CHECK(same.values == embedding.values);

    auto a = perturb_condition(embedding, 0.1, 7);
    auto b = perturb_condition(embedding, 0.1, 7);
    CHECK(a.values == b.values);
    CHECK(a.values != perturb_condition(embedding, 0.1, 8).values);

    gateway::Embedding bad{{0.1, std::nan("")}};
    CHECK_THROWS_AS(perturb_condition(bad, 0.1, 7), Error);
    CHECK_THROWS_AS(perturb_condition(embedding, -0.5, 7), Error);
}

TEST_CASE("perturb_condition gaussian moments at dim 4096") {
    const std::size_t dim = 4096;
    gateway::Embedding embedding;
    embedding.values.assign(dim, 0.25);

    const double sigma = 0.1;
    auto perturbed = perturb_condition(embedding, sigma, 12345);

    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        double delta = perturbed.values[i] - embedding.values[i];
        sum += delta;
        sum_sq += delta * delta;
    }
    double mean = sum / double(dim);
    double std_dev = std::sqrt(sum_sq / double(dim) - mean * mean);

    CHECK(std::abs(mean) < 4.0 * sigma / std::sqrt(double(dim)));
    CHECK(std_dev == doctest::Approx(sigma).epsilon(0.05));
}

TEST_CASE("generate_candidates produces N distinct content-addressed images") {
    TempDir dir;
    BlobStore store(dir.path / "blobs");
    testkit::MockSuite suite(testkit::MockConfig{.embed_dim = 16});

    T2iFn t2i = [&](const gateway::Embedding& condition, std::int64_t seed) {
        return suite.mock_t2i(condition, seed);
    };
    EmbedTextFn embed = [&](const std::string& text) { return suite.mock_embed_text(text); };

    GenerationConfig config;
    config.n_candidates = 8;
    config.sigma = 0.1;

    auto candidates = generate_candidates(t2i, embed, test_prompt(), config, store);
    REQUIRE(candidates.size() == 8);

    std::set<std::string> addresses;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        CHECK(candidates[i].prompt_id == "p-animals-0001");
        CHECK(candidates[i].seed == config.seed_base + std::int64_t(i) + 1);
        CHECK(candidates[i].noise_sigma == 0.1);
        CHECK(store.contains(candidates[i].image_ref));
        addresses.insert(candidates[i].image_ref);
    }
    CHECK(addresses.size() == 8);

    // Rerun reproduces identical addresses.
    auto rerun = generate_candidates(t2i, embed, test_prompt(), config, store);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        CHECK(rerun[i].image_ref == candidates[i].image_ref);
    }
}

TEST_CASE("generate_candidates sigma=0 differs only by latent seed") {
    TempDir dir;
    BlobStore store(dir.path / "blobs");
    testkit::MockSuite suite(testkit::MockConfig{.embed_dim = 16});

    T2iFn t2i = [&](const gateway::Embedding& condition, std::int64_t seed) {
        return suite.mock_t2i(condition, seed);
    };
    EmbedTextFn embed = [&](const std::string& text) { return suite.mock_embed_text(text); };

    GenerationConfig config;
    config.n_candidates = 2;
    config.sigma = 0.0;
    auto candidates = generate_candidates(t2i, embed, test_prompt(), config, store);
    REQUIRE(candidates.size() == 2);
    CHECK(candidates[0].seed != candidates[1].seed);
    CHECK(candidates[0].image_ref != candidates[1].image_ref);  // seed keys the mock
}

TEST_CASE("generate_candidates rejects N=1 and reports failed indices") {
    TempDir dir;
    BlobStore store(dir.path / "blobs");
    testkit::MockSuite suite(testkit::MockConfig{.embed_dim = 16});
    EmbedTextFn embed = [&](const std::string& text) { return suite.mock_embed_text(text); };

    GenerationConfig config;
    config.n_candidates = 1;
    T2iFn t2i = [&](const gateway::Embedding& c, std::int64_t s) { return suite.mock_t2i(c, s); };
    CHECK_THROWS_AS(generate_candidates(t2i, embed, test_prompt(), config, store), Error);

    config.n_candidates = 4;
    T2iFn flaky = [&](const gateway::Embedding& condition, std::int64_t seed) {
        if (seed == 2 || seed == 3) raise(ErrorKind::transport, "backend down");
        return suite.mock_t2i(condition, seed);
    };
    CHECK_THROWS_WITH_AS(generate_candidates(flaky, embed, test_prompt(), config, store),
                         doctest::Contains("indices: 2"), Error);
}

TEST_CASE("distinct outputs are non-decreasing in sigma") {
    // Same latent seed everywhere; only the condition noise varies. The mock
    // quantizes the condition, so wider noise reaches more cells.
    testkit::MockSuite suite(testkit::MockConfig{.embed_dim = 4, .quantize_step = 1.0});
    gateway::Embedding base = suite.mock_embed_text("a heron at dawn");

    std::size_t previous = 0;
    std::vector<std::size_t> counts;
    for (double sigma : {0.0, 0.1, 0.5, 1.0}) {
        std::set<std::vector<std::uint8_t>> images;
        for (int i = 1; i <= 8; ++i) {
            auto noisy = perturb_condition(base, sigma, std::uint64_t(100 + i));
            images.insert(suite.mock_t2i(noisy, 1));
        }
        counts.push_back(images.size());
        CHECK(images.size() >= previous);
        previous = images.size();
    }
    CHECK(counts.front() == 1);      // sigma = 0 collapses to one cell
    CHECK(counts.back() > counts.front());
}
