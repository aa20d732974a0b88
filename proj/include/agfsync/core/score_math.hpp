#pragma once

#include "agfsync/core/types.hpp"

namespace agfsync::core {

// Accepts iff weights are nonnegative and sum to 1 within 1e-9.
// Throws Error{validation} otherwise.
void validate_weights(const WeightConfig& weights);

// Weighted score S = w_vqa*s_vqa + w_clip*s_clip + w_aes*s_aes. The reserved
// s_pick slot carries no default weight and is ignored here.
// Throws Error{validation} on out-of-range scores or invalid weights.
double weighted_score(const ScoreVector& scores, const WeightConfig& weights);

inline constexpr double kWeightSumTolerance = 1e-9;

}  // namespace agfsync::core
