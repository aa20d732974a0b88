#include "agfsync/core/types.hpp"

#include "agfsync/core/error.hpp"
#include "agfsync/core/text.hpp"

namespace agfsync::core {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "Natural Landscapes",
    "Cities and Architecture",
    "People",
    "Animals",
    "Plants",
    "Food and Beverages",
    "Sports and Fitness",
    "Art and Culture",
    "Technology and Industry",
    "Everyday Objects",
    "Transportation",
    "Abstract and Conceptual Art",
};

constexpr std::array<std::string_view, kElementTypeCount> kElementTypeNames = {
    "object", "human",    "animal",  "food",     "activity", "attribute", "counting",
    "color",  "material", "spatial", "location", "shape",    "other",
};

}  // namespace

const std::array<Category, kCategoryCount>& all_categories() {
    static const std::array<Category, kCategoryCount> cats = [] {
        std::array<Category, kCategoryCount> out{};
        for (std::size_t i = 0; i < kCategoryCount; ++i) out[i] = Category(i);
        return out;
    }();
    return cats;
}

std::string_view category_name(Category c) { return kCategoryNames[std::size_t(c)]; }

Category category_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        if (kCategoryNames[i] == name) return Category(i);
    }
    raise(ErrorKind::validation, "unknown category: " + std::string(name));
}

std::string category_slug(Category c) { return slugify(category_name(c)); }

const std::array<ElementType, kElementTypeCount>& all_element_types() {
    static const std::array<ElementType, kElementTypeCount> types = [] {
        std::array<ElementType, kElementTypeCount> out{};
        for (std::size_t i = 0; i < kElementTypeCount; ++i) out[i] = ElementType(i);
        return out;
    }();
    return types;
}

std::string_view element_type_name(ElementType t) { return kElementTypeNames[std::size_t(t)]; }

ElementType element_type_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kElementTypeCount; ++i) {
        if (kElementTypeNames[i] == name) return ElementType(i);
    }
    raise(ErrorKind::validation, "unknown element_type: " + std::string(name));
}

bool is_element_type_name(std::string_view name) {
    for (std::size_t i = 0; i < kElementTypeCount; ++i) {
        if (kElementTypeNames[i] == name) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

void PromptRecord::validate() const {
    if (text.empty()) raise(ErrorKind::validation, "prompt text empty: " + prompt_id);
    if (word_count != core::word_count(text)) {
        raise(ErrorKind::validation, "word_count mismatch for " + prompt_id);
    }
}

void QAPair::validate() const {
    if (question_id <= 0) raise(ErrorKind::validation, "question_id must be positive");
    if (question.empty()) raise(ErrorKind::validation, "question empty");
    if (answer != "yes") raise(ErrorKind::validation, "answer must be \"yes\"");
    if (flag != 0 && flag != 1) raise(ErrorKind::validation, "flag must be 0 or 1");
}

void ScoreVector::validate() const {
    auto in_range = [](double v) { return v >= 0.0 && v <= 100.0; };
    if (!in_range(s_vqa) || !in_range(s_clip) || !in_range(s_aes)) {
        raise(ErrorKind::validation, "score outside [0, 100]");
    }
    if (s_pick && !in_range(*s_pick)) raise(ErrorKind::validation, "s_pick outside [0, 100]");
}

void PreferencePair::validate() const {
    if (winner == loser) raise(ErrorKind::validation, "winner == loser for " + prompt_id);
    if (margin < 0.0) raise(ErrorKind::validation, "negative margin for " + prompt_id);
}

// ---------------------------------------------------------------------------

void to_json(json& j, const PromptRecord& r) {
    j = json{{"prompt_id", r.prompt_id},
             {"category", category_name(r.category)},
             {"text", r.text},
             {"word_count", r.word_count},
             {"source_model", r.source_model},
             {"created_at", r.created_at}};
}

void from_json(const json& j, PromptRecord& r) {
    r.prompt_id = j.at("prompt_id").get<std::string>();
    r.category = category_from_name(j.at("category").get<std::string>());
    r.text = j.at("text").get<std::string>();
    r.word_count = j.at("word_count").get<std::size_t>();
    r.source_model = j.at("source_model").get<std::string>();
    r.created_at = j.at("created_at").get<std::string>();
}

void to_json(json& j, const QAPair& p) {
    j = json{{"question_id", p.question_id}, {"question", p.question},
             {"answer", p.answer},           {"element_type", element_type_name(p.element_type)},
             {"element", p.element},         {"flag", p.flag}};
}

void from_json(const json& j, QAPair& p) {
    p.question_id = j.at("question_id").get<int>();
    p.question = j.at("question").get<std::string>();
    p.answer = j.at("answer").get<std::string>();
    p.element_type = element_type_from_name(j.at("element_type").get<std::string>());
    p.element = j.at("element").get<std::string>();
    p.flag = j.at("flag").get<int>();
}

void to_json(json& j, const ScoreVector& s) {
    j = json{{"s_vqa", s.s_vqa}, {"s_clip", s.s_clip}, {"s_aes", s.s_aes}};
    if (s.s_pick) j["s_pick"] = *s.s_pick;
}

void from_json(const json& j, ScoreVector& s) {
    s.s_vqa = j.at("s_vqa").get<double>();
    s.s_clip = j.at("s_clip").get<double>();
    s.s_aes = j.at("s_aes").get<double>();
    s.s_pick = j.contains("s_pick") ? std::optional<double>(j.at("s_pick").get<double>()) : std::nullopt;
}

void to_json(json& j, const WeightConfig& w) {
    j = json{{"w_vqa", w.w_vqa}, {"w_clip", w.w_clip}, {"w_aes", w.w_aes}};
}

void from_json(const json& j, WeightConfig& w) {
    w.w_vqa = j.at("w_vqa").get<double>();
    w.w_clip = j.at("w_clip").get<double>();
    w.w_aes = j.at("w_aes").get<double>();
}

void to_json(json& j, const CandidateImage& c) {
    j = json{{"candidate_id", c.candidate_id},
             {"prompt_id", c.prompt_id},
             {"seed", c.seed},
             {"noise_sigma", c.noise_sigma},
             {"image_ref", c.image_ref}};
    j["scores"] = c.scores ? json(*c.scores) : json(nullptr);
    j["weighted"] = c.weighted ? json(*c.weighted) : json(nullptr);
}

void from_json(const json& j, CandidateImage& c) {
    c.candidate_id = j.at("candidate_id").get<std::string>();
    c.prompt_id = j.at("prompt_id").get<std::string>();
    c.seed = j.at("seed").get<std::int64_t>();
    c.noise_sigma = j.at("noise_sigma").get<double>();
    c.image_ref = j.at("image_ref").get<std::string>();
    c.scores = std::nullopt;
    if (j.contains("scores") && !j.at("scores").is_null()) c.scores = j.at("scores").get<ScoreVector>();
    c.weighted = std::nullopt;
    if (j.contains("weighted") && !j.at("weighted").is_null()) c.weighted = j.at("weighted").get<double>();
}

void to_json(json& j, const PreferencePair& p) {
    j = json{{"prompt_id", p.prompt_id},       {"winner", p.winner},
             {"loser", p.loser},               {"winner_score", p.winner_score},
             {"loser_score", p.loser_score},   {"margin", p.margin}};
}

void from_json(const json& j, PreferencePair& p) {
    p.prompt_id = j.at("prompt_id").get<std::string>();
    p.winner = j.at("winner").get<std::string>();
    p.loser = j.at("loser").get<std::string>();
    p.winner_score = j.at("winner_score").get<double>();
    p.loser_score = j.at("loser_score").get<double>();
    p.margin = j.at("margin").get<double>();
}

}  // namespace agfsync::core
