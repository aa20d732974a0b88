#include "agfsync/pairs/preference_builder.hpp"

#include "agfsync/core/error.hpp"

namespace agfsync::pairs {

PairSelection select_pair(std::span<const core::CandidateImage> candidates) {
    std::vector<const core::CandidateImage*> scored;
    for (const auto& candidate : candidates) {
        if (candidate.weighted.has_value()) scored.push_back(&candidate);
    }
    if (scored.size() < 2) return {std::nullopt, "too_few_scored"};

    // Strict comparisons keep the first occurrence on ties (generation order).
    const core::CandidateImage* winner = scored.front();
    const core::CandidateImage* loser = scored.front();
    for (const auto* candidate : scored) {
        if (*candidate->weighted > *winner->weighted) winner = candidate;
        if (*candidate->weighted < *loser->weighted) loser = candidate;
    }

    if (*winner->weighted == *loser->weighted) return {std::nullopt, "degenerate"};

    core::PreferencePair pair;
    pair.prompt_id = winner->prompt_id;
    pair.winner = winner->candidate_id;
    pair.loser = loser->candidate_id;
    pair.winner_score = *winner->weighted;
    pair.loser_score = *loser->weighted;
    pair.margin = pair.winner_score - pair.loser_score;
    pair.validate();
    return {pair, ""};
}

bool filter_by_threshold(std::span<const core::CandidateImage> candidates, double vqa_threshold,
                         double aes_threshold) {
    for (const auto& candidate : candidates) {
        if (!candidate.scores) continue;
        if (candidate.scores->s_vqa > 100.0 * vqa_threshold &&
            candidate.scores->s_aes > 100.0 * aes_threshold) {
            return true;
        }
    }
    return false;
}

double conversion_efficiency(std::size_t prompts_in, std::size_t pairs_out) {
    if (prompts_in == 0) raise(ErrorKind::precondition, "prompts_in must be >= 1");
    return double(pairs_out) / double(prompts_in);
}

}  // namespace agfsync::pairs
