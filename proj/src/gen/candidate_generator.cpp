#include "agfsync/gen/candidate_generator.hpp"

#include <cmath>

#include "agfsync/core/error.hpp"
#include "agfsync/core/log.hpp"
#include "agfsync/core/rng.hpp"

namespace agfsync::gen {

void GenerationConfig::validate() const {
    if (n_candidates < 2) {
        raise(ErrorKind::precondition, "preference construction needs n_candidates >= 2");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        raise(ErrorKind::precondition, "sigma must be finite and >= 0");
    }
}

gateway::Embedding perturb_condition(const gateway::Embedding& condition, double sigma,
                                     std::uint64_t noise_seed) {
    condition.validate();
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        raise(ErrorKind::precondition, "sigma must be finite and >= 0");
    }
    if (sigma == 0.0) return condition;

    core::CounterRng rng(noise_seed);
    gateway::Embedding out;
    out.values.resize(condition.values.size());
    for (std::size_t i = 0; i < condition.values.size(); ++i) {
        out.values[i] = condition.values[i] + sigma * rng.gaussian(i);
    }
    return out;
}

std::vector<core::CandidateImage> generate_candidates(const T2iFn& t2i,
                                                      const EmbedTextFn& embed_text,
                                                      const core::PromptRecord& prompt,
                                                      const GenerationConfig& config,
                                                      BlobStore& store) {
    config.validate();

    gateway::Embedding condition = embed_text(prompt.text);
    condition.validate();

    std::vector<core::CandidateImage> candidates;
    candidates.reserve(std::size_t(config.n_candidates));
    std::string failures;

    for (int i = 1; i <= config.n_candidates; ++i) {
        try {
            auto perturbed = perturb_condition(condition, config.sigma,
                                               std::uint64_t(config.noise_seed_base + i));
            std::int64_t latent_seed = config.seed_base + i;
            auto image = t2i(perturbed, latent_seed);
            if (image.empty()) raise(ErrorKind::contract, "t2i returned empty image");

            core::CandidateImage candidate;
            candidate.candidate_id = prompt.prompt_id + "-c" + std::to_string(i);
            candidate.prompt_id = prompt.prompt_id;
            candidate.seed = latent_seed;
            candidate.noise_sigma = config.sigma;
            candidate.image_ref = store.put(image);
            candidates.push_back(std::move(candidate));
        } catch (const Error& e) {
            failures += (failures.empty() ? "" : ", ") + std::to_string(i) + " (" + e.what() + ")";
        }
    }

    if (!failures.empty()) {
        raise(ErrorKind::state,
              "candidate generation failed for " + prompt.prompt_id + " at indices: " + failures);
    }
    return candidates;
}

}  // namespace agfsync::gen
