#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coadjoint {

enum class ErrorCode {
    NotTimelike,
    NotLightlike,
    OutOfCatalog,
    ConstraintViolation,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace coadjoint
