#include "agfsync/scoring/grid_search.hpp"

#include <algorithm>
#include <cmath>

#include "agfsync/core/error.hpp"
#include "agfsync/core/score_math.hpp"

namespace agfsync::scoring {

void WeightGrid::validate() const {
    auto check = [](const std::vector<double>& candidates, const char* name) {
        if (candidates.empty()) raise(ErrorKind::validation, std::string(name) + " grid empty");
        for (double v : candidates) {
            if (!(v > 0.0 && v < 1.0)) {
                raise(ErrorKind::validation,
                      std::string(name) + " candidate out of (0,1): " + std::to_string(v));
            }
        }
    };
    check(clip_candidates, "clip");
    check(vqa_candidates, "vqa");
    check(aes_candidates, "aes");
}

std::vector<core::WeightConfig> enumerate_weight_triples(const WeightGrid& grid) {
    grid.validate();

    auto sorted_desc = [](std::vector<double> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    auto clips = sorted_desc(grid.clip_candidates);
    auto vqas = sorted_desc(grid.vqa_candidates);
    auto aess = sorted_desc(grid.aes_candidates);

    std::vector<core::WeightConfig> triples;
    for (double clip : clips) {
        for (double vqa : vqas) {
            for (double aes : aess) {
                if (std::abs(clip + vqa + aes - 1.0) <= core::kWeightSumTolerance) {
                    triples.push_back(core::WeightConfig{vqa, clip, aes});
                }
            }
        }
    }
    return triples;
}

core::WeightConfig grid_search_weights(const WeightGrid& grid, const WeightObjective& objective) {
    auto triples = enumerate_weight_triples(grid);
    if (triples.empty()) raise(ErrorKind::validation, "no weight triple sums to 1");

    const core::WeightConfig* best = nullptr;
    double best_value = 0.0;
    for (const auto& triple : triples) {
        double value = objective(triple);
        // Strict improvement only: enumeration order already encodes the
        // descending lexicographic tie rule.
        if (best == nullptr || value > best_value) {
            best = &triple;
            best_value = value;
        }
    }
    return *best;
}

}  // namespace agfsync::scoring
