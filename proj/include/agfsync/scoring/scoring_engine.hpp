#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "agfsync/core/types.hpp"
#include "agfsync/gateway/endpoint.hpp"
#include "agfsync/gen/blob_store.hpp"

namespace agfsync::scoring {

struct ClipConfig {
    double gamma = 100.0;

    void validate() const;  // gamma > 0
};

using VqaFn = std::function<std::string(const std::vector<std::uint8_t>& image,
                                        const std::string& question)>;
using EmbedTextFn = std::function<gateway::Embedding(const std::string& text)>;
using EmbedImageFn = std::function<gateway::Embedding(const std::vector<std::uint8_t>& image)>;
using AestheticFn = std::function<double(const std::vector<std::uint8_t>& image)>;

// Fraction of yes-questions the VQA model answers "yes", scaled to [0, 100].
// All pairs must carry flag=1. A backend failure on any question aborts the
// whole image's score (no partial credit).
double vqa_score(const VqaFn& vqa, const std::vector<std::uint8_t>& image,
                 std::span<const core::QAPair> pairs);

// cosine(text, image) * gamma, clamped at 0 with a warning when the cosine
// is negative so downstream weighting stays inside [0, 100].
double clip_score(const gateway::Embedding& text_emb, const gateway::Embedding& image_emb,
                  const ClipConfig& config = {});

// 100 x the backend's raw [0, 1] rating.
double aesthetic_score(const AestheticFn& aesthetic, const std::vector<std::uint8_t>& image);

struct ScoringBackends {
    VqaFn vqa;
    EmbedTextFn embed_text;
    EmbedImageFn embed_image;
    AestheticFn aesthetic;
};

// Fills scores + weighted on a copy of the candidate. Throws on sub-score
// failure; the caller keeps the candidate unscored in that case.
core::CandidateImage score_candidate(const ScoringBackends& backends,
                                     const core::PromptRecord& prompt,
                                     std::span<const core::QAPair> pairs,
                                     const core::CandidateImage& candidate,
                                     const gen::BlobStore& store,
                                     const core::WeightConfig& weights,
                                     const ClipConfig& clip = {});

}  // namespace agfsync::scoring
