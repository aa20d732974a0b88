#include "agfsync/scoring/scoring_engine.hpp"

#include <cmath>

#include "agfsync/core/error.hpp"
#include "agfsync/core/log.hpp"
#include "agfsync/core/score_math.hpp"
#include "agfsync/core/text.hpp"

namespace agfsync::scoring {

void ClipConfig::validate() const {
    if (!(gamma > 0.0)) raise(ErrorKind::validation, "gamma must be > 0");
}

double vqa_score(const VqaFn& vqa, const std::vector<std::uint8_t>& image,
                 std::span<const core::QAPair> pairs) {
    if (pairs.empty()) raise(ErrorKind::precondition, "vqa_score needs at least one question");
    for (const auto& pair : pairs) {
        if (pair.flag != 1) raise(ErrorKind::precondition, "vqa_score pairs must carry flag=1");
    }

    std::size_t matches = 0;
    for (const auto& pair : pairs) {
        std::string reply = vqa(image, pair.question);  // failures propagate, no partial score
        if (core::answer_is_yes(reply)) ++matches;
    }
    return 100.0 * double(matches) / double(pairs.size());
}

double clip_score(const gateway::Embedding& text_emb, const gateway::Embedding& image_emb,
                  const ClipConfig& config) {
    config.validate();
    if (text_emb.dim() != image_emb.dim()) {
        raise(ErrorKind::precondition, "clip_score dim mismatch: " + std::to_string(text_emb.dim()) +
                                           " vs " + std::to_string(image_emb.dim()));
    }
    text_emb.validate();
    image_emb.validate();

    double dot = 0.0, norm_t = 0.0, norm_i = 0.0;
    for (int k = 0; k < text_emb.dim(); ++k) {
        double t = text_emb.values[std::size_t(k)];
        double v = image_emb.values[std::size_t(k)];
        dot += t * v;
        norm_t += t * t;
        norm_i += v * v;
    }
    if (norm_t == 0.0 || norm_i == 0.0) {
        raise(ErrorKind::precondition, "clip_score zero-norm embedding");
    }

    double score = dot / (std::sqrt(norm_t) * std::sqrt(norm_i)) * config.gamma;
    if (score < 0.0) {
        core::log_warn("negative CLIP score " + std::to_string(score) + " clamped to 0");
        return 0.0;
    }
    return score;
}

double aesthetic_score(const AestheticFn& aesthetic, const std::vector<std::uint8_t>& image) {
    double raw = aesthetic(image);
    if (!(raw >= 0.0 && raw <= 1.0)) {
        raise(ErrorKind::contract, "aesthetic raw score out of [0,1]: " + std::to_string(raw));
    }
    return 100.0 * raw;
}

core::CandidateImage score_candidate(const ScoringBackends& backends,
                                     const core::PromptRecord& prompt,
                                     std::span<const core::QAPair> pairs,
                                     const core::CandidateImage& candidate,
                                     const gen::BlobStore& store,
                                     const core::WeightConfig& weights,
                                     const ClipConfig& clip) {
    core::validate_weights(weights);
    auto image = store.get(candidate.image_ref);

    core::ScoreVector scores;
    scores.s_vqa = vqa_score(backends.vqa, image, pairs);
    scores.s_clip = clip_score(backends.embed_text(prompt.text), backends.embed_image(image), clip);
    scores.s_aes = aesthetic_score(backends.aesthetic, image);
    // gamma > 100 could push the clip term past the weighted-score range.
    if (scores.s_clip > 100.0) {
        core::log_warn("clip score " + std::to_string(scores.s_clip) + " clamped to 100");
        scores.s_clip = 100.0;
    }

    core::CandidateImage scored = candidate;
    scored.scores = scores;
    scored.weighted = core::weighted_score(scores, weights);
    return scored;
}

}  // namespace agfsync::scoring
