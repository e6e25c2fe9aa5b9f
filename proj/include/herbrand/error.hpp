#pragma once

#include <stdexcept>
#include <string>

namespace herbrand {

enum class ErrorCode {
    NotSublattice,
    RelationsNotPreserved,
    OrderViolation,
    WrongGroupOrder,
    ModuleInfinite,
    BoundExceeded,
    InvalidPermutation,
    OrderMismatch,
    GroupOrderMismatch,
    NotSquarefree,
    DTooSmall,
    VariantUnavailable,
    NotPrime,
    MissingInfinitePlace,
    ParseError,
    ValidationError,
    UsageError,
    Internal,
};

const char* to_string(ErrorCode code);

/// All library failures are reported through this exception. `code` is the
/// stable machine-readable identity; `what()` carries a human message that
/// may include a witness (e.g. the offending vector or generator index).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace herbrand
