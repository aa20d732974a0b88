#include "agfsync/qa/qa_factory.hpp"

#include <set>
#include <sstream>

#include "agfsync/core/error.hpp"
#include "agfsync/core/log.hpp"
#include "agfsync/core/text.hpp"

namespace agfsync::qa {

std::string build_qa_instruction(const std::string& caption) {
    if (core::trim(caption).empty()) raise(ErrorKind::precondition, "caption empty");

    std::ostringstream text;
    text << "You are a large language model, trained on a massive dataset of text. You can "
            "receive the text as a prompt for Text-to-Image models and break it down into "
            "general interrogative sentences that verifies if the image description is correct "
            "and give answers to those questions.\n";
    text << "You must follow these rules:\n";
    text << "1. Based on the text content, the answers to the questions you generate must only "
            "be 'yes', meaning the questions you generate should be general interrogative "
            "sentences.\n";
    text << "2. The questions you generate must have a definitive and correct answer that can "
            "be found in the given text, and this answer must be 'yes'.\n";
    text << "3. The correct answer to your generated question cannot be unmentioned in the "
            "text, nor can it be inferred solely from common sense; it must be explicitly "
            "stated in the text.\n";
    text << "4. Each question you break down from the text must be unique, meaning that each "
            "question must be different.\n";
    text << "5. If you break down the text into questions, each question must be atomic, i.e., "
            "they must not be divided into new sub-questions.\n";
    text << "6. Categorize each question into types (object, human, animal, food, activity, "
            "attribute, counting, color, material, spatial, location, shape, other).\n";
    text << "7. You must generate at least 15 questions, ensuring there are at least 15 "
            "question ids.\n";
    text << "8. The questions you generate must cover the content contained in the text as "
            "much as possible.\n";
    text << "9. You also need to indicate whether the question you provided is an invalid "
            "question of the \"not mentioned in the text\" type, with 0 representing an invalid "
            "question and 1 representing a valid question.\n";
    text << "\n";
    text << "Each time I'll give you a text that will serve as a prompt for Text-to-Image "
            "models.\n";
    text << "You should only respond in JSON format as described below:\n";
    text << "[\n"
            "    {\n"
            "        \"question_id\": \"The number of the question you generated, starting "
            "with 1\",\n"
            "        \"question\": \"A general interrogative sentence derived from the text "
            "whose answer according to the text must be 'yes'\",\n"
            "        \"answer\": \"The real answer to the question according to the text. The "
            "answer should be 'yes'\",\n"
            "        \"element_type\": \"The type of the question. (object, human, animal, "
            "food, activity, attribute, counting, color, material, spatial, location, shape, "
            "other)\",\n"
            "        \"element\": \"The elements mentioned in the question, or the specific "
            "elements asked by the question\",\n"
            "        \"flag\": \"0 for an invalid question, 1 for a valid question\"\n"
            "    }\n"
            "]\n";
    text << "Ensure that the response can be parsed by json.loads in Python, for example: no "
            "trailing commas, no single quotes, and so on.\n";
    text << "\n";
    text << "Text: " << caption;
    return text.str();
}

namespace {

// question_id and flag arrive as ints or numeric strings depending on the
// model; coerce both.
bool coerce_int(const nlohmann::json& value, int& out) {
    if (value.is_number_integer()) {
        out = value.get<int>();
        return true;
    }
    if (value.is_string()) {
        try {
            std::size_t used = 0;
            std::string s = core::trim(value.get<std::string>());
            out = std::stoi(s, &used);
            return used == s.size();
        } catch (const std::exception&) {
            return false;
        }
    }
    return false;
}

}  // namespace

std::vector<core::QAPair> parse_qa_reply(const std::string& reply) {
    std::string stripped = core::strip_code_fences(reply);
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(stripped);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::parse, std::string("QA reply is not JSON: ") + e.what());
    }
    if (!parsed.is_array()) raise(ErrorKind::parse, "QA reply is not a JSON array");

    std::vector<core::QAPair> pairs;
    for (const auto& entry : parsed) {
        if (!entry.is_object()) {
            core::log_warn("dropping non-object QA entry");
            continue;
        }
        auto missing = [&](const char* field) { return !entry.contains(field); };
        if (missing("question_id") || missing("question") || missing("answer") ||
            missing("element_type") || missing("element") || missing("flag")) {
            core::log_warn("dropping QA entry with missing fields: " + entry.dump());
            continue;
        }

        core::QAPair pair;
        if (!coerce_int(entry["question_id"], pair.question_id)) {
            core::log_warn("dropping QA entry with bad question_id");
            continue;
        }
        if (!entry["question"].is_string()) {
            core::log_warn("dropping QA entry with non-string question");
            continue;
        }
        pair.question = entry["question"].get<std::string>();
        if (core::trim(pair.question).empty()) {
            core::log_warn("dropping QA entry with empty question");
            continue;
        }

        std::string type_name = entry["element_type"].is_string()
                                    ? entry["element_type"].get<std::string>()
                                    : std::string();
        if (!core::is_element_type_name(type_name)) {
            core::log_warn("dropping QA entry with unknown element_type \"" + type_name + "\"");
            continue;
        }
        pair.element_type = core::element_type_from_name(type_name);
        pair.element = entry["element"].is_string() ? entry["element"].get<std::string>() : "";

        if (!coerce_int(entry["flag"], pair.flag) || (pair.flag != 0 && pair.flag != 1)) {
            core::log_warn("dropping QA entry with bad flag");
            continue;
        }

        std::string raw_answer =
            entry["answer"].is_string() ? entry["answer"].get<std::string>() : "";
        if (core::answer_is_yes(raw_answer)) {
            pair.answer = "yes";
        } else {
            // Non-yes answers violate the generation rules; keep the entry
            // but flag it invalid so downstream filtering removes it.
            pair.answer = core::to_lower(raw_answer);
            pair.flag = 0;
        }
        pairs.push_back(std::move(pair));
    }

    if (pairs.empty()) raise(ErrorKind::parse, "QA reply yielded no usable entries");
    return pairs;
}

std::vector<core::QAPair> dedup_questions(std::span<const core::QAPair> pairs) {
    std::vector<core::QAPair> out;
    std::set<std::string> seen;
    for (const auto& pair : pairs) {
        if (seen.insert(core::normalize_question(pair.question)).second) {
            out.push_back(pair);
        }
    }
    return out;
}

std::vector<core::QAPair> collect_qa(const CompleteFn& llm, const core::PromptRecord& prompt,
                                     const CollectOptions& options) {
    if (options.rounds < 1) raise(ErrorKind::precondition, "rounds must be >= 1");

    std::string instruction = build_qa_instruction(prompt.text);
    std::vector<core::QAPair> collected;
    int failed_rounds = 0;

    for (int round = 0; round < options.rounds; ++round) {
        std::vector<core::QAPair> round_pairs;
        bool round_ok = false;
        std::string last_error;
        for (int attempt = 0; attempt <= options.parse_retries && !round_ok; ++attempt) {
            try {
                round_pairs = parse_qa_reply(llm(instruction));
                round_ok = true;
            } catch (const Error& e) {
                last_error = e.what();
            }
        }
        if (!round_ok) {
            ++failed_rounds;
            core::log_warn("QA round " + std::to_string(round + 1) + " failed for " +
                           prompt.prompt_id + ": " + last_error);
            continue;
        }
        for (auto& pair : round_pairs) {
            if (pair.flag == 1) collected.push_back(std::move(pair));
        }
    }

    if (failed_rounds == options.rounds) {
        raise(ErrorKind::state, "all QA rounds failed for " + prompt.prompt_id);
    }

    auto unique = dedup_questions(collected);
    for (std::size_t i = 0; i < unique.size(); ++i) {
        unique[i].question_id = int(i) + 1;
        unique[i].answer = "yes";
    }
    return unique;
}

}  // namespace agfsync::qa
