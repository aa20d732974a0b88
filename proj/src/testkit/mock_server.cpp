#include "agfsync/testkit/mock_server.hpp"

#include <httplib.h>

#include <thread>

#include "agfsync/core/error.hpp"

namespace agfsync::testkit {

struct MockServer::Impl {
    explicit Impl(MockConfig config) : suite(config) { bind_routes(); }

    void bind_routes() {
        for (std::size_t i = 0; i < gateway::kBackendKindCount; ++i) {
            auto kind = gateway::BackendKind(i);
            server.Post(std::string(gateway::backend_route(kind)),
                        [this, kind](const httplib::Request& req, httplib::Response& res) {
                            try {
                                auto request = nlohmann::json::parse(req.body);
                                res.set_content(suite.handle(kind, request).dump(),
                                                "application/json");
                            } catch (const std::exception& e) {
                                res.status = 400;
                                res.set_content(nlohmann::json{{"error", e.what()}}.dump(),
                                                "application/json");
                            }
                        });
        }
    }

    MockSuite suite;
    httplib::Server server;
    std::thread thread;
};

MockServer::MockServer(MockConfig config) : impl_(std::make_unique<Impl>(config)) {}

MockServer::~MockServer() { stop(); }

int MockServer::start(int port) {
    if (port == 0) {
        port_ = impl_->server.bind_to_any_port("127.0.0.1");
    } else {
        if (!impl_->server.bind_to_port("127.0.0.1", port)) {
            raise(ErrorKind::io, "cannot bind mock server to port " + std::to_string(port));
        }
        port_ = port;
    }
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port_;
}

void MockServer::stop() {
    if (impl_ && impl_->thread.joinable()) {
        impl_->server.stop();
        impl_->thread.join();
    }
}

void MockServer::run(int port) {
    port_ = port;
    if (!impl_->server.listen("0.0.0.0", port)) {
        raise(ErrorKind::io, "mock server failed to listen on port " + std::to_string(port));
    }
}

}  // namespace agfsync::testkit
