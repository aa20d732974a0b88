#pragma once

#include <stdexcept>
#include <string>

namespace agfsync {

// Error taxonomy for the whole pipeline. Stage runners map these onto
// exit codes and itemized failure lists.
enum class ErrorKind {
    validation,    // bad value for a contract (range, sum, arity)
    precondition,  // caller violated an operation precondition
    parse,         // malformed model reply or file content
    contract,      // backend reply violates the wire contract
    transport,     // network / process-level failure after retries
    io,            // filesystem failure
    state,         // pipeline state problem (missing upstream, corrupt manifest)
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::parse: return "parse";
        case ErrorKind::contract: return "contract";
        case ErrorKind::transport: return "transport";
        case ErrorKind::io: return "io";
        case ErrorKind::state: return "state";
    }
    return "unknown";
}

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace agfsync
