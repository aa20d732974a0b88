#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace agfsync::core {

// ---------------------------------------------------------------------------
// Category

enum class Category {
    natural_landscapes,
    cities_and_architecture,
    people,
    animals,
    plants,
    food_and_beverages,
    sports_and_fitness,
    art_and_culture,
    technology_and_industry,
    everyday_objects,
    transportation,
    abstract_and_conceptual_art,
};

inline constexpr std::size_t kCategoryCount = 12;

const std::array<Category, kCategoryCount>& all_categories();
std::string_view category_name(Category c);
Category category_from_name(std::string_view name);  // throws Error{validation}
std::string category_slug(Category c);

// ---------------------------------------------------------------------------
// Element types for QA pairs

enum class ElementType {
    object,
    human,
    animal,
    food,
    activity,
    attribute,
    counting,
    color,
    material,
    spatial,
    location,
    shape,
    other,
};

inline constexpr std::size_t kElementTypeCount = 13;

const std::array<ElementType, kElementTypeCount>& all_element_types();
std::string_view element_type_name(ElementType t);
ElementType element_type_from_name(std::string_view name);  // throws Error{validation}
bool is_element_type_name(std::string_view name);

// ---------------------------------------------------------------------------
// Records

struct PromptRecord {
    std::string prompt_id;
    Category category = Category::natural_landscapes;
    std::string text;
    std::size_t word_count = 0;
    std::string source_model;
    std::string created_at;

    void validate() const;  // text nonempty, word_count consistent
};

struct QAPair {
    int question_id = 0;  // positive, unique per prompt
    std::string question;
    std::string answer = "yes";
    ElementType element_type = ElementType::other;
    std::string element;
    int flag = 1;  // 0 invalid, 1 valid

    void validate() const;
};

struct ScoreVector {
    double s_vqa = 0.0;
    double s_clip = 0.0;
    double s_aes = 0.0;
    std::optional<double> s_pick;  // reserved slot, not part of default weighting

    void validate() const;  // all present fields within [0, 100]
};

struct WeightConfig {
    double w_vqa = 0.35;
    double w_clip = 0.55;
    double w_aes = 0.10;
};

struct CandidateImage {
    std::string candidate_id;
    std::string prompt_id;
    std::int64_t seed = 0;
    double noise_sigma = 0.0;
    std::string image_ref;  // content address into the blob store
    std::optional<ScoreVector> scores;
    std::optional<double> weighted;
};

struct PreferencePair {
    std::string prompt_id;
    std::string winner;
    std::string loser;
    double winner_score = 0.0;
    double loser_score = 0.0;
    double margin = 0.0;

    void validate() const;  // margin >= 0, winner != loser
};

// ---------------------------------------------------------------------------
// Canonical JSON (snake_case field names; these encodings are the JSONL line
// format for every stage file)

using json = nlohmann::json;

void to_json(json& j, const PromptRecord& r);
void from_json(const json& j, PromptRecord& r);

void to_json(json& j, const QAPair& p);
void from_json(const json& j, QAPair& p);

void to_json(json& j, const ScoreVector& s);
void from_json(const json& j, ScoreVector& s);

void to_json(json& j, const WeightConfig& w);
void from_json(const json& j, WeightConfig& w);

void to_json(json& j, const CandidateImage& c);
void from_json(const json& j, CandidateImage& c);

void to_json(json& j, const PreferencePair& p);
void from_json(const json& j, PreferencePair& p);

}  // namespace agfsync::core
