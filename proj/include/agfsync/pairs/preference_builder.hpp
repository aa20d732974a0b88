#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agfsync/core/types.hpp"

namespace agfsync::pairs {

// Outcome of winner/loser selection for one prompt: either a pair or a
// skip with a recorded reason.
struct PairSelection {
    std::optional<core::PreferencePair> pair;
    std::string skip_reason;  // "degenerate", "too_few_scored", ...

    bool selected() const { return pair.has_value(); }
};

// winner = argmax weighted, loser = argmin weighted over the scored
// candidates of one prompt; ties break toward the smaller generation index
// (list order). All-equal scores skip with reason "degenerate"; fewer than
// two scored candidates skip with reason "too_few_scored".
PairSelection select_pair(std::span<const core::CandidateImage> candidates);

// DreamSync-style retention: the prompt survives iff at least one candidate
// clears both thresholds strictly. Thresholds arrive on the raw [0, 1]
// scale and are compared against the x100 stored scores.
bool filter_by_threshold(std::span<const core::CandidateImage> candidates, double vqa_threshold,
                         double aes_threshold);

// pairs_out / prompts_in. Throws Error{precondition} when prompts_in == 0.
double conversion_efficiency(std::size_t prompts_in, std::size_t pairs_out);

}  // namespace agfsync::pairs
