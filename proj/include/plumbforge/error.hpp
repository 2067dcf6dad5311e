#pragma once

#include <stdexcept>
#include <string>

namespace plumbforge {

enum class ErrorCode {
    invalid_input = 1,
    parse = 2,
    indefinite = 3,
    cap_exceeded = 4,
    not_applicable = 5,
    mismatch = 6,
    inconsistent = 7,
    internal = 99
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace plumbforge
