#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "agfsync/core/text.hpp"
#include "agfsync/core/types.hpp"
#include "agfsync/imaging/png_io.hpp"
#include "agfsync/testkit/mocks.hpp"

using namespace agfsync;
using testkit::MockConfig;
using testkit::MockSuite;

TEST_CASE("mock llm caption replies honor the requested count") {
    MockSuite suite;
    std::string instruction =
        "Generate 10 descriptions.\nThe format of your answer should be:\n{\"descriptions\":[...]}";
    auto reply = nlohmann::json::parse(suite.mock_llm(instruction));
    REQUIRE(reply.contains("descriptions"));
    CHECK(reply["descriptions"].size() == 10);

    // All captions distinct after normalization, all nonempty.
    std::set<std::string> normalized;
    for (const auto& d : reply["descriptions"]) {
        auto text = d.get<std::string>();
        CHECK_FALSE(text.empty());
        normalized.insert(core::normalize_caption(text));
    }
    CHECK(normalized.size() == 10);

    CHECK(suite.mock_llm(instruction) == suite.mock_llm(instruction));
}

TEST_CASE("mock llm QA replies satisfy the QA schema") {
    MockSuite suite;
    std::string instruction =
        "Break the text into question_id entries.\nText: A red kite over the beach.";
    auto reply = nlohmann::json::parse(suite.mock_llm(instruction));
    REQUIRE(reply.is_array());
    CHECK(reply.size() >= 15);
    for (const auto& entry : reply) {
        CHECK(entry.at("answer") == "yes");
        int flag = entry.at("flag").get<int>();
        CHECK((flag == 0 || flag == 1));
        CHECK(core::is_element_type_name(entry.at("element_type").get<std::string>()));
        CHECK_FALSE(entry.at("question").get<std::string>().empty());
    }
    // Different captions produce different question sets.
    CHECK(suite.mock_llm(instruction) != suite.mock_llm(instruction + " Variation."));
}

TEST_CASE("mock t2i is a valid png keyed on seed and quantized condition") {
    MockSuite suite(MockConfig{.embed_dim = 4, .quantize_step = 0.5});
    gateway::Embedding base{{0.1, 0.2, 0.3, 0.4}};

    std::set<std::vector<std::uint8_t>> images;
    for (int seed = 1; seed <= 8; ++seed) images.insert(suite.mock_t2i(base, seed));
    CHECK(images.size() == 8);  // seed keying

    // Conditions within one quantization cell collapse to the same image.
    gateway::Embedding nudged{{0.11, 0.21, 0.31, 0.41}};
    CHECK(suite.mock_t2i(base, 1) == suite.mock_t2i(nudged, 1));
    gateway::Embedding far{{0.9, 0.2, 0.3, 0.4}};
    CHECK(suite.mock_t2i(base, 1) != suite.mock_t2i(far, 1));

    auto decoded = imaging::decode_gray_png(suite.mock_t2i(base, 1));
    CHECK(decoded.width == 16);
    CHECK(decoded.height == 16);
}

TEST_CASE("mock vqa and aesthetic determinism") {
    MockSuite suite;
    std::vector<std::uint8_t> image = {1, 2, 3};
    auto answer = suite.mock_vqa(image, "Is there a dog?");
    CHECK((answer == "yes" || answer == "no"));
    CHECK(answer == suite.mock_vqa(image, "Is there a dog?"));

    double aes = suite.mock_aesthetic(image);
    CHECK(aes >= 0.0);
    CHECK(aes < 1.0);
    CHECK(aes == suite.mock_aesthetic(image));

    // Parity rule produces both answers over a spread of questions.
    bool saw_yes = false, saw_no = false;
    for (int i = 0; i < 32 && !(saw_yes && saw_no); ++i) {
        auto a = suite.mock_vqa(image, "Is there item " + std::to_string(i) + "?");
        saw_yes |= a == "yes";
        saw_no |= a == "no";
    }
    CHECK(saw_yes);
    CHECK(saw_no);
}

TEST_CASE("mock embed yields unit vectors") {
    MockSuite suite(MockConfig{.embed_dim = 48});
    auto e = suite.mock_embed_text("a lantern in the fog");
    CHECK(e.dim() == 48);
    double norm_sq = 0.0;
    for (double v : e.values) norm_sq += v * v;
    CHECK(std::abs(std::sqrt(norm_sq) - 1.0) < 1e-6);
    CHECK(e.values == suite.mock_embed_text("a lantern in the fog").values);
    CHECK(e.values != suite.mock_embed_text("a different caption").values);
}

TEST_CASE("mock judge position-invariant mode swaps its letter with the images") {
    MockSuite suite(MockConfig{.judge_position_invariant = true});
    std::vector<std::uint8_t> image_a = {10, 20, 30};
    std::vector<std::uint8_t> image_b = {40, 50, 60};

    auto forward = nlohmann::json::parse(suite.mock_judge("Which image do you prefer?", image_a, image_b));
    auto swapped = nlohmann::json::parse(suite.mock_judge("Which image do you prefer?", image_b, image_a));
    std::string fwd_choice = forward.at("choice").get<std::string>();
    std::string swp_choice = swapped.at("choice").get<std::string>();
    CHECK(fwd_choice != swp_choice);  // same underlying preference, opposite slots
    CHECK_FALSE(forward.at("reason").get<std::string>().empty());
}

TEST_CASE("mock salt separates universes") {
    MockSuite a(MockConfig{.salt = 1});
    MockSuite b(MockConfig{.salt = 2});
    std::vector<std::uint8_t> image = {7, 7, 7};
    CHECK(a.mock_aesthetic(image) != b.mock_aesthetic(image));
}
