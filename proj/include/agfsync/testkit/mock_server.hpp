#pragma once

#include <memory>
#include <string>

#include "agfsync/testkit/mocks.hpp"

namespace agfsync::testkit {

// Serves the MockSuite over HTTP on all six routes, so the CLI and gateway
// exercise the real wire path offline.
class MockServer {
  public:
    explicit MockServer(MockConfig config = {});
    ~MockServer();

    MockServer(const MockServer&) = delete;
    MockServer& operator=(const MockServer&) = delete;

    // port 0 picks a free port. Returns the bound port; server runs on a
    // background thread until stop().
    int start(int port = 0);
    void stop();

    int port() const { return port_; }
    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

    // Blocking serve loop for the mockserve binary.
    void run(int port);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int port_ = 0;
};

}  // namespace agfsync::testkit
