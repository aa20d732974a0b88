#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "agfsync/core/error.hpp"
#include "agfsync/core/text.hpp"
#include "agfsync/prompts/prompt_factory.hpp"
#include "agfsync/testkit/mocks.hpp"

using namespace agfsync;
using namespace agfsync::prompts;
using core::Category;

namespace {
std::vector<std::string> paper_exemplars() {
    const auto& arr = builtin_natural_landscape_exemplars();
    return {arr.begin(), arr.end()};
}
}  // namespace

TEST_CASE("build_prompt_instruction embeds num, theme, exemplars, and footer") {
    auto exemplars = paper_exemplars();
    auto instruction =
        build_prompt_instruction(Category::natural_landscapes, 10, exemplars);

    CHECK(instruction.rendered.find("Generate 10 descriptions.") != std::string::npos);
    CHECK(instruction.rendered.find("Natural Landscapes: Includes terrain") != std::string::npos);
    for (const auto& exemplar : exemplars) {
        CHECK(instruction.rendered.find(exemplar) != std::string::npos);
    }
    CHECK(instruction.rendered.find("\"descriptions\":[...]") != std::string::npos);
    CHECK(instruction.rendered.find("can be parsed by json.loads") != std::string::npos);

    // All ten numbered rules present.
    for (int rule = 1; rule <= 10; ++rule) {
        CHECK(instruction.rendered.find("\n" + std::to_string(rule) + ". ") != std::string::npos);
    }

    // Boundary: a singleton request is valid.
    CHECK(build_prompt_instruction(Category::people, 1, exemplars).num == 1);
}

TEST_CASE("build_prompt_instruction arity and range errors") {
    auto exemplars = paper_exemplars();
    std::vector<std::string> four(exemplars.begin(), exemplars.begin() + 4);
    CHECK_THROWS_AS(build_prompt_instruction(Category::animals, 10, four), Error);
    CHECK_THROWS_AS(build_prompt_instruction(Category::animals, 0, exemplars), Error);
    std::vector<std::string> with_empty = exemplars;
    with_empty[2] = "   ";
    CHECK_THROWS_AS(build_prompt_instruction(Category::animals, 10, with_empty), Error);
}

TEST_CASE("parse_descriptions accepts good replies and rejects malformed ones") {
    CHECK(parse_descriptions(R"({"descriptions":["a cat","a dog"]})") ==
          std::vector<std::string>{"a cat", "a dog"});
    CHECK(parse_descriptions("```json\n{\"descriptions\":[\"a cat\"]}\n```") ==
          std::vector<std::string>{"a cat"});

    CHECK_THROWS_AS(parse_descriptions(R"({"descriptions":[]})"), Error);
    CHECK_THROWS_AS(parse_descriptions(R"({"desc":["x"]})"), Error);
    CHECK_THROWS_AS(parse_descriptions("not json at all"), Error);
    CHECK_THROWS_AS(parse_descriptions(R"({"descriptions":["ok", 42]})"), Error);
    CHECK_THROWS_AS(parse_descriptions(R"({"descriptions":[""]})"), Error);
}

TEST_CASE("parse after render of a known-good reply is the identity") {
    std::vector<std::string> captions = {"a red kite", "an old tram in the rain",
                                         "three lanterns on a pier"};
    std::string reply = nlohmann::json{{"descriptions", captions}}.dump();
    CHECK(parse_descriptions(reply) == captions);
}

TEST_CASE("generate_prompts batch arithmetic on the mock llm") {
    testkit::MockSuite suite;
    int calls = 0;
    CompleteFn llm = [&](const std::string& instruction) {
        ++calls;
        return suite.mock_llm(instruction);
    };

    auto exemplars = paper_exemplars();
    GenerateOptions options;
    options.batch_size = 5;
    auto records = generate_prompts(llm, Category::natural_landscapes, 7, exemplars, options);

    CHECK(records.size() == 7);
    CHECK(calls == 2);  // ceil(7/5) batches: nums 5 and 2
    std::set<std::string> ids;
    for (const auto& record : records) {
        CHECK(record.category == Category::natural_landscapes);
        CHECK(record.word_count == core::word_count(record.text));
        CHECK_FALSE(record.text.empty());
        ids.insert(record.prompt_id);
        record.validate();
    }
    CHECK(ids.size() == 7);
}

TEST_CASE("generate_prompts covers all 12 categories") {
    testkit::MockSuite suite;
    CompleteFn llm = [&](const std::string& instruction) { return suite.mock_llm(instruction); };
    auto exemplars = paper_exemplars();

    std::set<Category> covered;
    std::size_t total = 0;
    for (Category category : core::all_categories()) {
        auto records = generate_prompts(llm, category, 2, exemplars);
        CHECK(records.size() == 2);
        total += records.size();
        for (const auto& record : records) covered.insert(record.category);
    }
    CHECK(total == 24);
    CHECK(covered.size() == 12);
}

TEST_CASE("generate_prompts error paths") {
    testkit::MockSuite suite;
    CompleteFn llm = [&](const std::string& instruction) { return suite.mock_llm(instruction); };
    auto exemplars = paper_exemplars();

    CHECK_THROWS_AS(generate_prompts(llm, Category::plants, 0, exemplars), Error);

    // Persistent parse failure surfaces as a stage error naming the batch.
    CompleteFn broken = [](const std::string&) { return "garbage"; };
    GenerateOptions options;
    options.parse_retries = 1;
    CHECK_THROWS_WITH_AS(generate_prompts(broken, Category::plants, 3, exemplars, options),
                         doctest::Contains("failed to parse"), Error);

    // An llm that always returns the same caption cannot satisfy count > 1.
    CompleteFn monotone = [](const std::string&) {
        return nlohmann::json{{"descriptions", {"same caption"}}}.dump();
    };
    options = GenerateOptions{};
    options.batch_size = 1;
    CHECK_THROWS_WITH_AS(generate_prompts(monotone, Category::plants, 3, exemplars, options),
                         doctest::Contains("shortfall"), Error);
}

TEST_CASE("exemplar files load and fall back correctly") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "agfsync_exemplar_test";
    fs::create_directories(dir);

    // Natural Landscapes falls back to the built-in set.
    auto fallback = exemplars_for(dir, Category::natural_landscapes);
    CHECK(fallback.examples == builtin_natural_landscape_exemplars());

    // Other categories require a file.
    CHECK_THROWS_AS(exemplars_for(dir, Category::animals), Error);

    nlohmann::json file = {
        {"category", "Animals"},
        {"examples", {"a fox", "a heron", "an otter", "a lynx", "a moth"}},
        {"theme", "Animals: wildlife in natural habitats."},
    };
    std::ofstream(dir / "animals.json") << file.dump(2);
    auto loaded = exemplars_for(dir, Category::animals);
    CHECK(loaded.category == Category::animals);
    CHECK(loaded.examples[0] == "a fox");
    CHECK(loaded.theme == "Animals: wildlife in natural habitats.");

    fs::remove_all(dir);
}
