#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace agfsync::core {

// Whitespace-token count; the word_count stored on every PromptRecord.
std::size_t word_count(std::string_view text);

std::string to_lower(std::string_view text);
std::string trim(std::string_view text);
std::string collapse_whitespace(std::string_view text);

// Dedup key for questions: lowercase, strip terminal punctuation, collapse
// whitespace.
std::string normalize_question(std::string_view question);

// Caption dedup key: lowercase + whitespace normalization.
std::string normalize_caption(std::string_view caption);

// Free-text answer matching: lowercase, punctuation stripped. "Yes, there
// is." matches via its leading token.
std::string normalize_answer(std::string_view answer);
bool answer_is_yes(std::string_view answer);

// Model replies often arrive wrapped in markdown code fences; strip them
// before JSON parsing.
std::string strip_code_fences(std::string_view reply);

// Lowercase identifier form of a display name: "Natural Landscapes" ->
// "natural_landscapes".
std::string slugify(std::string_view name);

}  // namespace agfsync::core
