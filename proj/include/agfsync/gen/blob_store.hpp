#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace agfsync::gen {

// Write-once content-addressed store: address = SHA-256 hex of the bytes,
// laid out as <root>/<first two hex chars>/<hex>. Writing the same content
// twice is a no-op, so reruns are cheap and audits can recompute addresses.
class BlobStore {
  public:
    explicit BlobStore(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    // Returns the content address; writes via temp-file + rename.
    std::string put(std::span<const std::uint8_t> bytes);

    bool contains(const std::string& address) const;

    // Throws Error{state} for unknown addresses, Error{io} on read failure.
    std::vector<std::uint8_t> get(const std::string& address) const;

  private:
    std::filesystem::path path_for(const std::string& address) const;

    std::filesystem::path root_;
};

}  // namespace agfsync::gen
