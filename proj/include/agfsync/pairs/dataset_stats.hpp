#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "agfsync/core/types.hpp"

namespace agfsync::pairs {

// QA pairs of one prompt; the qa.jsonl line shape.
struct PromptQA {
    std::string prompt_id;
    std::vector<core::QAPair> pairs;
};

void to_json(nlohmann::json& j, const PromptQA& q);
void from_json(const nlohmann::json& j, PromptQA& q);

struct CategoryStats {
    std::size_t prompt_count = 0;
    std::size_t pair_count = 0;
    double retention = 0.0;  // pair_count / prompt_count
};

struct StatsReport {
    std::size_t total_prompts = 0;
    std::size_t total_questions = 0;
    std::size_t total_pairs = 0;
    double mean_questions_per_prompt = 0.0;
    double mean_words_per_prompt = 0.0;
    double mean_words_per_question = 0.0;
    std::map<std::string, CategoryStats> per_category;  // keyed by category name
};

void to_json(nlohmann::json& j, const StatsReport& r);

// Pure arithmetic over the stage outputs; empty inputs produce a zeroed
// report.
StatsReport dataset_stats(std::span<const core::PromptRecord> prompts,
                          std::span<const PromptQA> qa,
                          std::span<const core::PreferencePair> pairs);

}  // namespace agfsync::pairs
