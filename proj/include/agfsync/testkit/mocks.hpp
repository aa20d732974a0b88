#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "agfsync/gateway/endpoint.hpp"
#include "agfsync/gateway/transport.hpp"

namespace agfsync::testkit {

struct MockConfig {
    int embed_dim = 64;
    double quantize_step = 0.5;  // condition quantization for the t2i mock
    int image_size = 16;         // mock PNG side length
    int qa_entries = 17;         // entries per QA reply, always >= 15
    bool judge_position_invariant = true;
    std::uint64_t salt = 0;  // distinct mock universes for tests
};

// Deterministic stand-ins for all six backend kinds. Every output is a pure
// function of the inputs via truncated SHA-256, so results are identical
// across processes and platforms.
class MockSuite {
  public:
    explicit MockSuite(MockConfig config = {}) : config_(config) {}

    const MockConfig& config() const { return config_; }

    // Sniffs the instruction: QA decomposition requests get a QA JSON array,
    // anything else gets a {"descriptions": [...]} caption batch.
    std::string mock_llm(const std::string& instruction) const;

    // Grayscale PNG keyed on (quantized condition, latent seed). The
    // quantization makes sigma-diversity observable: conditions within one
    // cell produce identical images.
    std::vector<std::uint8_t> mock_t2i(const gateway::Embedding& condition,
                                       std::int64_t latent_seed) const;

    // "yes" when the (image, question) key has even parity, else "no".
    std::string mock_vqa(std::span<const std::uint8_t> image, const std::string& question) const;

    gateway::Embedding mock_embed_text(const std::string& text) const;
    gateway::Embedding mock_embed_image(std::span<const std::uint8_t> image) const;

    // Uniform in [0, 1) keyed on the image.
    double mock_aesthetic(std::span<const std::uint8_t> image) const;

    // Schema-valid judge reply. Position-invariant mode prefers the image
    // with the larger key regardless of A/B order.
    std::string mock_judge(const std::string& instruction, std::span<const std::uint8_t> image_a,
                           std::span<const std::uint8_t> image_b) const;

    // Dispatch one wire-contract request; shared by the local transport
    // bindings and the HTTP server.
    nlohmann::json handle(gateway::BackendKind kind, const nlohmann::json& request) const;

    // Bind all six routes onto a LocalTransport.
    void install(gateway::LocalTransport& transport) const;

  private:
    std::uint64_t key(std::string_view domain, std::span<const std::uint8_t> payload) const;
    std::uint64_t key(std::string_view domain, std::string_view payload) const;
    gateway::Embedding embedding_from_key(std::uint64_t key) const;

    MockConfig config_;
};

}  // namespace agfsync::testkit
