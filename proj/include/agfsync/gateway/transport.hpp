#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <string>

namespace agfsync::gateway {

struct HttpResponse {
    int status = 0;
    std::string body;
};

struct RequestOptions {
    std::chrono::milliseconds timeout{30000};
    std::string auth_token;  // empty = none
};

// POST-only JSON transport. HttpTransport talks to real sockets; tests and
// in-process runs plug a LocalTransport with direct handlers.
class Transport {
  public:
    virtual ~Transport() = default;

    // Throws Error{transport} when the request cannot be delivered at all.
    // HTTP-level failures come back as status codes.
    virtual HttpResponse post(const std::string& base_url, const std::string& route,
                              const std::string& json_body, const RequestOptions& options) = 0;
};

class HttpTransport final : public Transport {
  public:
    HttpResponse post(const std::string& base_url, const std::string& route,
                      const std::string& json_body, const RequestOptions& options) override;
};

// Route table keyed by "<route>"; base_url ignored. Handlers return the
// response body for status 200 or throw to simulate failures.
class LocalTransport final : public Transport {
  public:
    using Handler = std::function<HttpResponse(const std::string& json_body)>;

    void route(const std::string& route, Handler handler) { handlers_[route] = std::move(handler); }

    HttpResponse post(const std::string& base_url, const std::string& route,
                      const std::string& json_body, const RequestOptions& options) override;

  private:
    std::map<std::string, Handler> handlers_;
};

}  // namespace agfsync::gateway
