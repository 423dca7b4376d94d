// Shared error type. Carries a machine-readable kind so the command line
// front end can map failures onto its exit-code contract.
#pragma once

#include <stdexcept>
#include <string>

namespace cat2alg {

enum class ErrorKind {
    invalid_input,           // malformed or inconsistent input data
    dimension_mismatch,      // operand shapes do not line up
    unsupported,             // operation not defined for this input
    identity_violation,      // validated structure fails a required identity
    enumeration_infeasible,  // requested enumeration is infinite or too large
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::identity_violation: return "identity_violation";
    case ErrorKind::enumeration_infeasible: return "enumeration_infeasible";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace cat2alg
