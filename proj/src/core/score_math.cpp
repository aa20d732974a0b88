#include "agfsync/core/score_math.hpp"

#include <cmath>

#include "agfsync/core/error.hpp"

namespace agfsync::core {

void validate_weights(const WeightConfig& weights) {
    if (weights.w_vqa < 0.0 || weights.w_clip < 0.0 || weights.w_aes < 0.0) {
        raise(ErrorKind::validation, "weights must be nonnegative");
    }
    double sum = weights.w_vqa + weights.w_clip + weights.w_aes;
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        raise(ErrorKind::validation, "weights must sum to 1, got " + std::to_string(sum));
    }
}

double weighted_score(const ScoreVector& scores, const WeightConfig& weights) {
    validate_weights(weights);
    scores.validate();
    return weights.w_vqa * scores.s_vqa + weights.w_clip * scores.s_clip + weights.w_aes * scores.s_aes;
}

}  // namespace agfsync::core
