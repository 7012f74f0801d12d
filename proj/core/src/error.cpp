#include "coadjoint/error.hpp"

namespace coadjoint {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotTimelike: return "not-timelike";
        case ErrorCode::NotLightlike: return "not-lightlike";
        case ErrorCode::OutOfCatalog: return "out-of-catalog";
        case ErrorCode::ConstraintViolation: return "constraint-violation";
        case ErrorCode::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

}  // namespace coadjoint
