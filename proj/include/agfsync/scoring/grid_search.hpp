#pragma once

#include <functional>
#include <vector>

#include "agfsync/core/types.hpp"

namespace agfsync::scoring {

// Candidate weight values for the grid search; triples must sum to 1.
struct WeightGrid {
    std::vector<double> clip_candidates = {0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6};
    std::vector<double> vqa_candidates = {0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6};
    std::vector<double> aes_candidates = {0.05, 0.1, 0.15, 0.2};

    void validate() const;  // nonempty, all candidates in (0, 1)
};

// All (w_clip, w_vqa, w_aes) combinations whose sum is 1 within 1e-9,
// ordered lexicographically descending by (w_clip, w_vqa, w_aes).
std::vector<core::WeightConfig> enumerate_weight_triples(const WeightGrid& grid);

using WeightObjective = std::function<double(const core::WeightConfig&)>;

// Argmax of the objective over the valid triples; the descending enumeration
// order makes ties resolve toward larger (w_clip, w_vqa, w_aes). Throws
// Error{validation} when no triple sums to 1.
core::WeightConfig grid_search_weights(const WeightGrid& grid, const WeightObjective& objective);

}  // namespace agfsync::scoring
