#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "agfsync/core/types.hpp"
#include "agfsync/gateway/endpoint.hpp"
#include "agfsync/gen/blob_store.hpp"

namespace agfsync::gen {

struct GenerationConfig {
    int n_candidates = 8;
    double sigma = 0.1;
    std::int64_t seed_base = 0;        // latent seeds: seed_base + i
    std::int64_t noise_seed_base = 0;  // condition-noise streams: noise_seed_base + i

    void validate() const;  // n_candidates >= 2, sigma finite and >= 0
};

// condition + n with n ~ N(0, sigma^2 I), drawn from the counter RNG stream
// keyed by noise_seed. sigma = 0 returns the input untouched.
gateway::Embedding perturb_condition(const gateway::Embedding& condition, double sigma,
                                     std::uint64_t noise_seed);

using T2iFn = std::function<std::vector<std::uint8_t>(const gateway::Embedding& condition,
                                                      std::int64_t latent_seed)>;
using EmbedTextFn = std::function<gateway::Embedding(const std::string& text)>;

// Embeds the caption once, then produces n_candidates images with
// per-candidate noise and latent seeds (index i in 1..N uses
// noise_seed_base+i and seed_base+i). Images land in the blob store;
// the returned list is ordered by index. A failing index aborts the batch
// with an itemized Error{state} naming the failed indices.
std::vector<core::CandidateImage> generate_candidates(const T2iFn& t2i,
                                                      const EmbedTextFn& embed_text,
                                                      const core::PromptRecord& prompt,
                                                      const GenerationConfig& config,
                                                      BlobStore& store);

}  // namespace agfsync::gen
