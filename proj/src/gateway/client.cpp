#include "agfsync/gateway/client.hpp"

#include <cmath>
#include <condition_variable>
#include <thread>

#include "agfsync/core/base64.hpp"
#include "agfsync/core/error.hpp"
#include "agfsync/core/log.hpp"
#include "agfsync/core/rng.hpp"

namespace agfsync::gateway {

// Caps concurrent requests across all endpoints sharing this client.
struct GatewayClient::Gate {
    explicit Gate(int limit) : limit(limit) {}

    void acquire() {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return in_flight < limit; });
        ++in_flight;
    }

    void release() {
        {
            std::lock_guard lock(mutex);
            --in_flight;
        }
        cv.notify_one();
    }

    int limit;
    int in_flight = 0;
    std::mutex mutex;
    std::condition_variable cv;

    struct Guard {
        explicit Guard(Gate& gate) : gate_(gate) { gate_.acquire(); }
        ~Guard() { gate_.release(); }
        Gate& gate_;
    };
};

namespace {
bool is_retryable_status(int status) { return status >= 500; }
}  // namespace

GatewayClient::GatewayClient(std::shared_ptr<Transport> transport, RetryPolicy retry,
                             int max_in_flight)
    : transport_(std::move(transport)),
      retry_(retry),
      max_in_flight_(max_in_flight),
      gate_(std::make_shared<Gate>(max_in_flight)) {}

std::string GatewayClient::next_request_id() {
    return "req-" + std::to_string(request_counter_.fetch_add(1) + 1);
}

nlohmann::json GatewayClient::call(const BackendEndpoint& endpoint, BackendKind expected_kind,
                                   nlohmann::json body) {
    endpoint.validate();
    if (endpoint.kind != expected_kind) {
        raise(ErrorKind::precondition,
              std::string("endpoint kind is ") + std::string(backend_kind_name(endpoint.kind)) +
                  ", operation requires " + std::string(backend_kind_name(expected_kind)));
    }

    body["request_id"] = next_request_id();
    const std::string route(backend_route(endpoint.kind));
    const std::string payload = body.dump();
    RequestOptions options{endpoint.timeout, endpoint.auth_token.value_or("")};

    core::CounterRng jitter(retry_.jitter_seed ^ request_counter_.load());
    std::string last_failure;

    for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
        if (attempt > 0 && retry_.base_delay.count() > 0) {
            double scale = std::pow(retry_.factor, attempt - 1);
            double delay_ms = double(retry_.base_delay.count()) * scale;
            if (retry_.full_jitter) delay_ms *= jitter.uniform01(std::uint64_t(attempt));
            std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(delay_ms));
        }

        HttpResponse response;
        try {
            Gate::Guard guard(*gate_);
            response = transport_->post(endpoint.base_url, route, payload, options);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::transport) throw;
            last_failure = e.what();
            continue;  // transport failures are retryable
        }

        if (response.status == 200) {
            try {
                return nlohmann::json::parse(response.body);
            } catch (const nlohmann::json::exception& e) {
                raise(ErrorKind::contract, route + " reply is not JSON: " + e.what());
            }
        }
        if (is_retryable_status(response.status)) {
            last_failure = route + " returned " + std::to_string(response.status);
            continue;
        }
        // 4xx-class: the request itself is wrong; retrying cannot help.
        raise(ErrorKind::contract,
              route + " rejected with status " + std::to_string(response.status) + ": " +
                  response.body);
    }

    raise(ErrorKind::transport, route + " failed after " + std::to_string(endpoint.max_retries + 1) +
                                    " attempts: " + last_failure);
}

std::string GatewayClient::complete_text(const BackendEndpoint& endpoint,
                                         const std::string& instruction) {
    auto reply = call(endpoint, BackendKind::llm, {{"instruction", instruction}});
    if (!reply.contains("reply") || !reply["reply"].is_string()) {
        raise(ErrorKind::contract, "/v1/complete reply missing \"reply\" string");
    }
    std::string text = reply["reply"].get<std::string>();
    if (text.empty()) raise(ErrorKind::contract, "llm returned an empty reply");
    return text;
}

std::vector<std::uint8_t> GatewayClient::generate_image(const BackendEndpoint& endpoint,
                                                        const Embedding& condition,
                                                        std::int64_t latent_seed) {
    condition.validate();
    auto reply = call(endpoint, BackendKind::t2i,
                      {{"embedding", condition.values}, {"latent_seed", latent_seed}});
    if (!reply.contains("image_b64") || !reply["image_b64"].is_string()) {
        raise(ErrorKind::contract, "/v1/generate reply missing \"image_b64\"");
    }
    auto bytes = core::base64_decode(reply["image_b64"].get<std::string>());
    if (bytes.empty()) raise(ErrorKind::contract, "t2i returned an empty image payload");
    return bytes;
}

std::string GatewayClient::answer_question(const BackendEndpoint& endpoint,
                                           const std::vector<std::uint8_t>& image,
                                           const std::string& question) {
    if (image.empty()) raise(ErrorKind::precondition, "vqa image payload empty");
    auto reply = call(endpoint, BackendKind::vqa,
                      {{"image_b64", core::base64_encode(image)}, {"question", question}});
    if (!reply.contains("answer") || !reply["answer"].is_string()) {
        raise(ErrorKind::contract, "/v1/vqa reply missing \"answer\"");
    }
    return reply["answer"].get<std::string>();
}

namespace {
Embedding parse_embed_reply(const nlohmann::json& reply) {
    if (!reply.contains("embedding") || !reply["embedding"].is_array()) {
        raise(ErrorKind::contract, "/v1/embed reply missing \"embedding\"");
    }
    if (!reply.contains("dim")) raise(ErrorKind::contract, "/v1/embed reply missing \"dim\"");
    Embedding out{reply["embedding"].get<std::vector<double>>()};
    int declared = reply["dim"].get<int>();
    if (declared != out.dim()) {
        raise(ErrorKind::contract, "embed dim mismatch: declared " + std::to_string(declared) +
                                       ", got " + std::to_string(out.dim()));
    }
    out.validate();
    return out;
}
}  // namespace

Embedding GatewayClient::embed_text(const BackendEndpoint& endpoint, const std::string& text) {
    if (text.empty()) raise(ErrorKind::precondition, "embed payload text empty");
    return parse_embed_reply(call(endpoint, BackendKind::embed, {{"text", text}}));
}

Embedding GatewayClient::embed_image(const BackendEndpoint& endpoint,
                                     const std::vector<std::uint8_t>& image) {
    if (image.empty()) raise(ErrorKind::precondition, "embed payload image empty");
    return parse_embed_reply(
        call(endpoint, BackendKind::embed, {{"image_b64", core::base64_encode(image)}}));
}

double GatewayClient::rate_aesthetics(const BackendEndpoint& endpoint,
                                      const std::vector<std::uint8_t>& image) {
    if (image.empty()) raise(ErrorKind::precondition, "aesthetic image payload empty");
    auto reply =
        call(endpoint, BackendKind::aesthetic, {{"image_b64", core::base64_encode(image)}});
    if (!reply.contains("score") || !reply["score"].is_number()) {
        raise(ErrorKind::contract, "/v1/aesthetic reply missing \"score\"");
    }
    double score = reply["score"].get<double>();
    if (!(score >= 0.0 && score <= 1.0)) {
        raise(ErrorKind::contract, "aesthetic score out of [0,1]: " + std::to_string(score));
    }
    return score;
}

std::string GatewayClient::judge_pair(const BackendEndpoint& endpoint,
                                      const std::string& instruction,
                                      const std::vector<std::uint8_t>& image_a,
                                      const std::vector<std::uint8_t>& image_b) {
    if (image_a.empty() || image_b.empty()) {
        raise(ErrorKind::precondition, "judge image payload empty");
    }
    auto reply = call(endpoint, BackendKind::judge,
                      {{"instruction", instruction},
                       {"image_a_b64", core::base64_encode(image_a)},
                       {"image_b_b64", core::base64_encode(image_b)}});
    if (!reply.contains("reply") || !reply["reply"].is_string()) {
        raise(ErrorKind::contract, "/v1/judge reply missing \"reply\"");
    }
    return reply["reply"].get<std::string>();
}

}  // namespace agfsync::gateway
