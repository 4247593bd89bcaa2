#ifndef MOSAIC_ERRORS_HPP
#define MOSAIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mosaic {

enum class ErrorCode {
    io = 1,
    parse = 2,
    validation = 3,
    config = 4,
    capacity = 5,
    infeasible = 6,
    invalid_argument = 7,
    internal = 8,
};

/// Library-wide exception; carries a stable code for the C API mapping.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::io: return "io";
        case ErrorCode::parse: return "parse";
        case ErrorCode::validation: return "validation";
        case ErrorCode::config: return "config";
        case ErrorCode::capacity: return "capacity";
        case ErrorCode::infeasible: return "infeasible";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace mosaic

#endif
