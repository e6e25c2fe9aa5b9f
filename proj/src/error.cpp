#include "herbrand/error.hpp"

namespace herbrand {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSublattice: return "NOT_SUBLATTICE";
        case ErrorCode::RelationsNotPreserved: return "RELATIONS_NOT_PRESERVED";
        case ErrorCode::OrderViolation: return "ORDER_VIOLATION";
        case ErrorCode::WrongGroupOrder: return "WRONG_GROUP_ORDER";
        case ErrorCode::ModuleInfinite: return "MODULE_INFINITE";
        case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
        case ErrorCode::InvalidPermutation: return "INVALID_PERMUTATION";
        case ErrorCode::OrderMismatch: return "ORDER_MISMATCH";
        case ErrorCode::GroupOrderMismatch: return "GROUP_ORDER_MISMATCH";
        case ErrorCode::NotSquarefree: return "NOT_SQUAREFREE";
        case ErrorCode::DTooSmall: return "D_TOO_SMALL";
        case ErrorCode::VariantUnavailable: return "VARIANT_UNAVAILABLE";
        case ErrorCode::NotPrime: return "NOT_PRIME";
        case ErrorCode::MissingInfinitePlace: return "MISSING_INFINITE_PLACE";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::ValidationError: return "VALIDATION_ERROR";
        case ErrorCode::UsageError: return "USAGE_ERROR";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

}  // namespace herbrand
