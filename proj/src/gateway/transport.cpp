#include "agfsync/gateway/transport.hpp"

#include <httplib.h>

#include "agfsync/core/error.hpp"

namespace agfsync::gateway {

HttpResponse HttpTransport::post(const std::string& base_url, const std::string& route,
                                 const std::string& json_body, const RequestOptions& options) {
    httplib::Client client(base_url);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
    client.set_connection_timeout(secs.count() > 0 ? secs.count() : 1, 0);
    client.set_read_timeout(secs.count() > 0 ? secs.count() : 1, 0);
    client.set_write_timeout(secs.count() > 0 ? secs.count() : 1, 0);

    httplib::Headers headers;
    if (!options.auth_token.empty()) {
        headers.emplace("Authorization", "Bearer " + options.auth_token);
    }

    auto result = client.Post(route, headers, json_body, "application/json");
    if (!result) {
        raise(ErrorKind::transport,
              "POST " + base_url + route + " failed: " + httplib::to_string(result.error()));
    }
    return HttpResponse{result->status, result->body};
}

HttpResponse LocalTransport::post(const std::string& base_url, const std::string& route,
                                  const std::string& json_body, const RequestOptions& options) {
    (void)base_url;
    (void)options;
    auto it = handlers_.find(route);
    if (it == handlers_.end()) {
        raise(ErrorKind::transport, "no local handler for route " + route);
    }
    return it->second(json_body);
}

}  // namespace agfsync::gateway
