#include "ndl/error.hpp"

namespace ndl {

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::out_of_range: return "OUT_OF_RANGE";
    case ErrorCode::self_loop: return "SELF_LOOP";
    case ErrorCode::size_limit: return "SIZE_LIMIT";
    case ErrorCode::invalid_switch: return "INVALID_SWITCH";
    case ErrorCode::range: return "RANGE";
    case ErrorCode::not_submultiset: return "NOT_SUBMULTISET";
    case ErrorCode::invalid_step: return "INVALID_STEP";
    case ErrorCode::fallback_exhausted: return "FALLBACK_EXHAUSTED";
    case ErrorCode::internal_mismatch: return "INTERNAL_MISMATCH";
    case ErrorCode::bad_char: return "BAD_CHAR";
    case ErrorCode::truncated: return "TRUNCATED";
    case ErrorCode::parse: return "PARSE";
    }
    return "UNKNOWN";
}

} // namespace ndl
