#include "agfsync/prompts/prompt_factory.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "agfsync/core/error.hpp"
#include "agfsync/core/log.hpp"
#include "agfsync/core/text.hpp"

namespace agfsync::prompts {

namespace {

constexpr std::string_view kRulesHeader =
    "You are a large language model, trained on a massive dataset of text. You can generate "
    "texts from given examples. You are asked to generate similar examples to the provided ones "
    "and follow these rules:";

constexpr std::string_view kFormatFooter =
    "The format of your answer should be:\n"
    "{\n"
    "    \"descriptions\":[...]\n"
    "}\n"
    "Ensure that the response can be parsed by json.loads in Python, for example: no trailing "
    "commas, no single quotes, and so on.";

}  // namespace

const std::array<std::string, kExemplarCount>& builtin_natural_landscape_exemplars() {
    static const std::array<std::string, kExemplarCount> exemplars = {
        "A sprawling meadow under a twilight sky, where the last rays of the sun kiss the tips "
        "of wildflowers, creating a canvas of gold and purple hues.",
        "A majestic waterfall cascading down rugged cliffs, enveloped by a mist that dances in "
        "the air, surrounded by an ancient forest whispering the tales of nature.",
        "An endless desert, where golden dunes rise and fall like waves in an ocean of sand, "
        "punctuated by the occasional resilient cactus standing as a testament to life's "
        "perseverance.",
        "A serene lake, mirror-like, reflecting the perfect image of surrounding snow-capped "
        "mountains, while a solitary swan glides gracefully, leaving ripples in its wake.",
        "The aurora borealis illuminating the polar sky in a symphony of greens and purples, "
        "arching over a silent, frozen landscape that sleeps under a blanket of snow.",
    };
    return exemplars;
}

std::string default_theme(core::Category category) {
    if (category == core::Category::natural_landscapes) {
        return "Natural Landscapes: Includes terrain, bodies of water, weather phenomena, and "
               "natural scenes.";
    }
    return std::string(core::category_name(category));
}

PromptInstruction build_prompt_instruction(core::Category category, int num,
                                           std::span<const std::string> exemplars,
                                           std::string_view theme) {
    if (num < 1) raise(ErrorKind::precondition, "num must be >= 1");
    if (exemplars.size() != kExemplarCount) {
        raise(ErrorKind::precondition,
              "exactly 5 exemplars required, got " + std::to_string(exemplars.size()));
    }
    for (const auto& exemplar : exemplars) {
        if (core::trim(exemplar).empty()) raise(ErrorKind::precondition, "exemplar empty");
    }

    PromptInstruction out;
    out.category = category;
    out.num = num;
    std::copy(exemplars.begin(), exemplars.end(), out.exemplars.begin());
    out.theme = theme.empty() ? default_theme(category) : std::string(theme);

    std::ostringstream text;
    text << kRulesHeader << "\n";
    text << "1. Your generation will be served as prompts for Text-to-Image models. So your "
            "prompt should be as visual as possible.\n";
    text << "2. Do NOT generate scary prompts.\n";
    text << "3. Do NOT repeat any existing examples.\n";
    text << "4. Your generated examples should be as creative as possible.\n";
    text << "5. Your generated examples should not have repetition.\n";
    text << "6. Your generated examples should be as diverse as possible.\n";
    text << "7. Do NOT include extra texts such as greetings.\n";
    text << "8. Generate " << num << " descriptions.\n";
    text << "9. The descriptions you generate should have a diverse word count, with both long "
            "and short lengths.\n";
    text << "10. The more detailed the description of an image, the better, and the more "
            "elements, the better.\n";
    text << "\n";
    text << "Please open your mind based on the theme \"" << out.theme << "\"\n";
    text << "\n";
    text << "Here are five example descriptions:\n";
    for (int i = 0; i < kExemplarCount; ++i) {
        text << (i + 1) << ". " << out.exemplars[std::size_t(i)] << "\n";
    }
    text << "\n";
    text << "Please imitate the example above to generate a diverse image description and do "
            "not repeat the example above.\n";
    text << "\n";
    text << kFormatFooter;

    out.rendered = text.str();
    return out;
}

std::vector<std::string> parse_descriptions(const std::string& reply) {
    std::string stripped = core::strip_code_fences(reply);
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(stripped);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::parse, std::string("reply is not JSON: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("descriptions")) {
        raise(ErrorKind::parse, "reply missing \"descriptions\" key");
    }
    const auto& array = parsed["descriptions"];
    if (!array.is_array()) raise(ErrorKind::parse, "\"descriptions\" is not an array");
    if (array.empty()) raise(ErrorKind::parse, "\"descriptions\" is empty");

    std::vector<std::string> captions;
    captions.reserve(array.size());
    for (const auto& entry : array) {
        if (!entry.is_string()) raise(ErrorKind::parse, "non-string description entry");
        auto text = entry.get<std::string>();
        if (core::trim(text).empty()) raise(ErrorKind::parse, "empty description entry");
        captions.push_back(std::move(text));
    }
    return captions;
}

ExemplarSet load_exemplar_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::io, "cannot open exemplar file " + path.string());
    nlohmann::json parsed;
    try {
        in >> parsed;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::parse, "exemplar file " + path.string() + ": " + e.what());
    }

    ExemplarSet out;
    out.category = core::category_from_name(parsed.at("category").get<std::string>());
    const auto& examples = parsed.at("examples");
    if (!examples.is_array() || examples.size() != kExemplarCount) {
        raise(ErrorKind::validation,
              "exemplar file " + path.string() + " must carry exactly 5 examples");
    }
    for (int i = 0; i < kExemplarCount; ++i) {
        out.examples[std::size_t(i)] = examples[std::size_t(i)].get<std::string>();
    }
    out.theme = parsed.value("theme", default_theme(out.category));
    return out;
}

ExemplarSet exemplars_for(const std::filesystem::path& dir, core::Category category) {
    auto path = dir / (core::category_slug(category) + ".json");
    if (std::filesystem::exists(path)) return load_exemplar_file(path);
    if (category == core::Category::natural_landscapes) {
        ExemplarSet out;
        out.category = category;
        out.examples = builtin_natural_landscape_exemplars();
        out.theme = default_theme(category);
        return out;
    }
    raise(ErrorKind::io, "no exemplar file for category \"" +
                             std::string(core::category_name(category)) + "\" at " + path.string());
}

namespace {

// One parsed batch, retried on parse failure up to the retry budget.
std::vector<std::string> run_batch(const CompleteFn& llm, const std::string& instruction,
                                   int parse_retries) {
    std::string last_error;
    for (int attempt = 0; attempt <= parse_retries; ++attempt) {
        std::string reply = llm(instruction);
        try {
            return parse_descriptions(reply);
        } catch (const Error& e) {
            last_error = e.what();
            core::log_warn(std::string("caption batch parse failed (attempt ") +
                           std::to_string(attempt + 1) + "): " + last_error);
        }
    }
    raise(ErrorKind::parse, "caption batch failed after retries: " + last_error);
}

}  // namespace

std::vector<core::PromptRecord> generate_prompts(const CompleteFn& llm, core::Category category,
                                                 int count,
                                                 std::span<const std::string> exemplars,
                                                 const GenerateOptions& options,
                                                 std::string_view theme) {
    if (count < 1) raise(ErrorKind::precondition, "count must be >= 1");
    if (options.batch_size < 1) raise(ErrorKind::precondition, "batch_size must be >= 1");

    std::vector<std::string> captions;
    std::set<std::string> seen;
    std::vector<int> failed_batches;

    auto absorb = [&](const std::vector<std::string>& batch) {
        int added = 0;
        for (const auto& caption : batch) {
            if (!seen.insert(core::normalize_caption(caption)).second) {
                core::log_warn("dropping duplicate caption: " + caption);
                continue;
            }
            captions.push_back(caption);
            ++added;
        }
        return added;
    };

    int n_batches = (count + options.batch_size - 1) / options.batch_size;
    for (int b = 0; b < n_batches; ++b) {
        int batch_num = b + 1 == n_batches ? count - b * options.batch_size : options.batch_size;
        auto instruction = build_prompt_instruction(category, batch_num, exemplars, theme);
        try {
            absorb(run_batch(llm, instruction.rendered, options.parse_retries));
        } catch (const Error&) {
            failed_batches.push_back(b);
        }
    }
    if (!failed_batches.empty()) {
        std::string list;
        for (int b : failed_batches) list += (list.empty() ? "" : ", ") + std::to_string(b);
        raise(ErrorKind::state, "caption batches failed to parse after retries: [" + list + "]");
    }

    for (int round = 0; round < options.topup_rounds && int(captions.size()) < count; ++round) {
        int missing = count - int(captions.size());
        auto instruction = build_prompt_instruction(category, missing, exemplars, theme);
        if (absorb(run_batch(llm, instruction.rendered, options.parse_retries)) == 0) break;
    }
    if (int(captions.size()) < count) {
        raise(ErrorKind::state, "caption dedup shortfall for " +
                                    std::string(core::category_name(category)) + ": wanted " +
                                    std::to_string(count) + ", got " +
                                    std::to_string(captions.size()));
    }
    captions.resize(std::size_t(count));

    std::string prefix = options.id_prefix.empty() ? core::category_slug(category) : options.id_prefix;
    std::vector<core::PromptRecord> records;
    records.reserve(captions.size());
    for (std::size_t i = 0; i < captions.size(); ++i) {
        core::PromptRecord record;
        char suffix[8];
        std::snprintf(suffix, sizeof(suffix), "%04zu", i + 1);
        record.prompt_id = prefix + "-" + suffix;
        record.category = category;
        record.text = captions[i];
        record.word_count = core::word_count(record.text);
        record.source_model = options.source_model;
        record.created_at = options.created_at;
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace agfsync::prompts
