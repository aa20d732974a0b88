#include "agfsync/pairs/dataset_stats.hpp"

#include <map>

#include "agfsync/core/text.hpp"

namespace agfsync::pairs {

void to_json(nlohmann::json& j, const PromptQA& q) {
    j = nlohmann::json{{"prompt_id", q.prompt_id}, {"pairs", q.pairs}};
}

void from_json(const nlohmann::json& j, PromptQA& q) {
    q.prompt_id = j.at("prompt_id").get<std::string>();
    q.pairs = j.at("pairs").get<std::vector<core::QAPair>>();
}

void to_json(nlohmann::json& j, const StatsReport& r) {
    nlohmann::json categories = nlohmann::json::object();
    for (const auto& [name, stats] : r.per_category) {
        categories[name] = {{"prompt_count", stats.prompt_count},
                            {"pair_count", stats.pair_count},
                            {"retention", stats.retention}};
    }
    j = nlohmann::json{{"total_prompts", r.total_prompts},
                       {"total_questions", r.total_questions},
                       {"total_pairs", r.total_pairs},
                       {"mean_questions_per_prompt", r.mean_questions_per_prompt},
                       {"mean_words_per_prompt", r.mean_words_per_prompt},
                       {"mean_words_per_question", r.mean_words_per_question},
                       {"per_category", categories}};
}

StatsReport dataset_stats(std::span<const core::PromptRecord> prompts,
                          std::span<const PromptQA> qa,
                          std::span<const core::PreferencePair> pairs) {
    StatsReport report;
    report.total_prompts = prompts.size();
    report.total_pairs = pairs.size();

    std::size_t prompt_words = 0;
    std::map<std::string, std::string> prompt_category;  // prompt_id -> category name
    for (const auto& prompt : prompts) {
        prompt_words += prompt.word_count;
        std::string name(core::category_name(prompt.category));
        prompt_category[prompt.prompt_id] = name;
        report.per_category[name].prompt_count += 1;
    }

    std::size_t question_words = 0;
    for (const auto& entry : qa) {
        report.total_questions += entry.pairs.size();
        for (const auto& pair : entry.pairs) question_words += core::word_count(pair.question);
    }

    for (const auto& pair : pairs) {
        auto it = prompt_category.find(pair.prompt_id);
        if (it != prompt_category.end()) report.per_category[it->second].pair_count += 1;
    }
    for (auto& [name, stats] : report.per_category) {
        stats.retention =
            stats.prompt_count == 0 ? 0.0 : double(stats.pair_count) / double(stats.prompt_count);
    }

    if (report.total_prompts > 0) {
        report.mean_questions_per_prompt =
            double(report.total_questions) / double(report.total_prompts);
        report.mean_words_per_prompt = double(prompt_words) / double(report.total_prompts);
    }
    if (report.total_questions > 0) {
        report.mean_words_per_question = double(question_words) / double(report.total_questions);
    }
    return report;
}

}  // namespace agfsync::pairs
