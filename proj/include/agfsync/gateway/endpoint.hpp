#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace agfsync::gateway {

enum class BackendKind { llm, t2i, vqa, embed, aesthetic, judge };

inline constexpr std::size_t kBackendKindCount = 6;

std::string_view backend_kind_name(BackendKind kind);
BackendKind backend_kind_from_name(std::string_view name);  // throws Error{validation}

// Route each kind may call. One POST route per kind.
std::string_view backend_route(BackendKind kind);

struct BackendEndpoint {
    BackendKind kind = BackendKind::llm;
    std::string base_url;
    std::optional<std::string> auth_token;
    std::chrono::milliseconds timeout{30000};
    int max_retries = 2;

    void validate() const;  // max_retries >= 0, base_url nonempty
};

// Fixed-length real vector; the carrier for text/image embeddings.
struct Embedding {
    std::vector<double> values;

    int dim() const { return int(values.size()); }
    bool finite() const;
    void validate() const;  // throws on non-finite values or empty
};

void to_json(nlohmann::json& j, const Embedding& e);
void from_json(const nlohmann::json& j, Embedding& e);

}  // namespace agfsync::gateway
