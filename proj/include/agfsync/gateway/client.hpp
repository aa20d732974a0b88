#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "agfsync/gateway/endpoint.hpp"
#include "agfsync/gateway/transport.hpp"

namespace agfsync::gateway {

struct RetryPolicy {
    std::chrono::milliseconds base_delay{250};
    double factor = 2.0;
    bool full_jitter = true;
    std::uint64_t jitter_seed = 0;
};

// Uniform client over all six backend kinds. Validates replies against the
// wire contract, retries transport/5xx failures with exponential backoff,
// and caps in-flight requests per endpoint.
class GatewayClient {
  public:
    explicit GatewayClient(std::shared_ptr<Transport> transport, RetryPolicy retry = {},
                           int max_in_flight = 8);

    // kind llm. Rejects empty replies.
    std::string complete_text(const BackendEndpoint& endpoint, const std::string& instruction);

    // kind t2i. Condition must be finite; backend returns image bytes.
    std::vector<std::uint8_t> generate_image(const BackendEndpoint& endpoint,
                                             const Embedding& condition, std::int64_t latent_seed);

    // kind vqa. Free-text answer for one question about one image.
    std::string answer_question(const BackendEndpoint& endpoint,
                                const std::vector<std::uint8_t>& image, const std::string& question);

    // kind embed. Reply must match its declared dim and be finite.
    Embedding embed_text(const BackendEndpoint& endpoint, const std::string& text);
    Embedding embed_image(const BackendEndpoint& endpoint, const std::vector<std::uint8_t>& image);

    // kind aesthetic. Raw score in [0, 1]; rescaling happens downstream.
    double rate_aesthetics(const BackendEndpoint& endpoint, const std::vector<std::uint8_t>& image);

    // kind judge. Returns the judge model's raw reply text.
    std::string judge_pair(const BackendEndpoint& endpoint, const std::string& instruction,
                           const std::vector<std::uint8_t>& image_a,
                           const std::vector<std::uint8_t>& image_b);

  private:
    nlohmann::json call(const BackendEndpoint& endpoint, BackendKind expected_kind,
                        nlohmann::json body);
    std::string next_request_id();

    std::shared_ptr<Transport> transport_;
    RetryPolicy retry_;
    int max_in_flight_;
    std::atomic<std::uint64_t> request_counter_{0};

    struct Gate;
    std::shared_ptr<Gate> gate_;
};

}  // namespace agfsync::gateway
