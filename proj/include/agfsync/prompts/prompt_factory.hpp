#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agfsync/core/types.hpp"

namespace agfsync::prompts {

inline constexpr int kExemplarCount = 5;

// Category-specific in-context instruction for caption generation: ten
// numbered rules, a theme line, five exemplars, and the JSON-format footer.
struct PromptInstruction {
    core::Category category = core::Category::natural_landscapes;
    int num = 0;
    std::array<std::string, kExemplarCount> exemplars;
    std::string theme;
    std::string rendered;
};

// The five Natural Landscapes exemplars shipped with the tool; the other
// eleven categories require user-supplied exemplar files.
const std::array<std::string, kExemplarCount>& builtin_natural_landscape_exemplars();

std::string default_theme(core::Category category);

// Throws Error{precondition} on num < 1, wrong exemplar count, or an empty
// exemplar. Empty theme falls back to default_theme(category).
PromptInstruction build_prompt_instruction(core::Category category, int num,
                                           std::span<const std::string> exemplars,
                                           std::string_view theme = {});

// Extracts the "descriptions" array from a model reply. Code-fence tolerant.
// Throws Error{parse} on non-JSON input, a missing key, an empty list, or
// non-string/empty entries.
std::vector<std::string> parse_descriptions(const std::string& reply);

// One exemplar file per category: {"category": ..., "examples": [5 strings],
// "theme": optional}.
struct ExemplarSet {
    core::Category category = core::Category::natural_landscapes;
    std::array<std::string, kExemplarCount> examples;
    std::string theme;
};

ExemplarSet load_exemplar_file(const std::filesystem::path& path);

// Looks for <dir>/<category_slug>.json; Natural Landscapes falls back to the
// built-in exemplars when the file is absent.
ExemplarSet exemplars_for(const std::filesystem::path& dir, core::Category category);

using CompleteFn = std::function<std::string(const std::string& instruction)>;

struct GenerateOptions {
    int batch_size = 10;
    int parse_retries = 2;  // re-issue a batch whose reply fails to parse
    int topup_rounds = 3;   // extra batches when dedup leaves a shortfall
    std::string source_model = "unknown";
    std::string created_at = "1970-01-01T00:00:00Z";
    std::string id_prefix;  // defaults to the category slug
};

// Issues ceil(count / batch_size) calls (last batch carries the remainder),
// dedups captions case-insensitively, and returns exactly `count` records in
// (batch, position) order. Throws Error{state} when batches keep failing to
// parse or the dedup shortfall cannot be recovered.
std::vector<core::PromptRecord> generate_prompts(const CompleteFn& llm, core::Category category,
                                                 int count,
                                                 std::span<const std::string> exemplars,
                                                 const GenerateOptions& options = {},
                                                 std::string_view theme = {});

}  // namespace agfsync::prompts
