#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agfsync::core {

// FIPS 180-4 SHA-256. Self-contained so that content addresses and all
// mock keying are identical on every platform (no std::hash anywhere).
class Sha256 {
  public:
    Sha256() { reset(); }

    void reset();
    void update(const void* data, std::size_t len);
    void update(std::string_view text) { update(text.data(), text.size()); }
    void update(std::span<const std::uint8_t> bytes) { update(bytes.data(), bytes.size()); }
    std::array<std::uint8_t, 32> finish();

  private:
    void process_block(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_{};
    std::array<std::uint8_t, 64> buffer_{};
    std::uint64_t total_len_ = 0;
    std::size_t buffer_len_ = 0;
};

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> bytes);
std::array<std::uint8_t, 32> sha256(std::string_view text);

std::string hex_digest(const std::array<std::uint8_t, 32>& digest);

// First 8 digest bytes, big-endian. The fixed 64-bit key used by the mocks
// and seed-stream derivation.
std::uint64_t sha256_u64(std::string_view text);
std::uint64_t sha256_u64(std::span<const std::uint8_t> bytes);

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

}  // namespace agfsync::core
