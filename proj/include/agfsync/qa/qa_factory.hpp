#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "agfsync/core/types.hpp"

namespace agfsync::qa {

using CompleteFn = std::function<std::string(const std::string& instruction)>;

// Renders the QA decomposition instruction: nine numbered rules, the 13-type
// categorization list, the JSON response schema, and the caption. Throws
// Error{precondition} on an empty caption.
std::string build_qa_instruction(const std::string& caption);

// Parses a model reply into QAPairs. Entries with an unknown element_type or
// a missing field are dropped with a warning; entries whose answer is not
// "yes" are retained with flag forced to 0. Flag strings "0"/"1" coerce to
// integers. Throws Error{parse} when the reply is not a JSON array or no
// entry survives.
std::vector<core::QAPair> parse_qa_reply(const std::string& reply);

// Keeps the first occurrence per normalized question text. Idempotent.
std::vector<core::QAPair> dedup_questions(std::span<const core::QAPair> pairs);

struct CollectOptions {
    int rounds = 6;
    int parse_retries = 2;
};

// Runs `rounds` decomposition rounds over one prompt, drops flag=0 entries,
// dedups, and renumbers question_id 1..K in (round, entry) order. Throws
// Error{state} when every round fails.
std::vector<core::QAPair> collect_qa(const CompleteFn& llm, const core::PromptRecord& prompt,
                                     const CollectOptions& options = {});

}  // namespace agfsync::qa
