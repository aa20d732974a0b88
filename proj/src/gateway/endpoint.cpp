#include "agfsync/gateway/endpoint.hpp"

#include <cmath>

#include "agfsync/core/error.hpp"

namespace agfsync::gateway {

namespace {
constexpr std::string_view kKindNames[kBackendKindCount] = {"llm",   "t2i",       "vqa",
                                                            "embed", "aesthetic", "judge"};
constexpr std::string_view kRoutes[kBackendKindCount] = {"/v1/complete", "/v1/generate",
                                                         "/v1/vqa",      "/v1/embed",
                                                         "/v1/aesthetic", "/v1/judge"};
}  // namespace

std::string_view backend_kind_name(BackendKind kind) { return kKindNames[std::size_t(kind)]; }

BackendKind backend_kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kBackendKindCount; ++i) {
        if (kKindNames[i] == name) return BackendKind(i);
    }
    raise(ErrorKind::validation, "unknown backend kind: " + std::string(name));
}

std::string_view backend_route(BackendKind kind) { return kRoutes[std::size_t(kind)]; }

void BackendEndpoint::validate() const {
    if (base_url.empty()) raise(ErrorKind::validation, "endpoint base_url empty");
    if (max_retries < 0) raise(ErrorKind::validation, "max_retries must be >= 0");
}

bool Embedding::finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void Embedding::validate() const {
    if (values.empty()) raise(ErrorKind::validation, "embedding empty");
    if (!finite()) raise(ErrorKind::validation, "embedding has non-finite values");
}

void to_json(nlohmann::json& j, const Embedding& e) { j = nlohmann::json{{"values", e.values}}; }

void from_json(const nlohmann::json& j, Embedding& e) {
    e.values = j.at("values").get<std::vector<double>>();
}

}  // namespace agfsync::gateway
