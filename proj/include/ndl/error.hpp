#ifndef NDL_ERROR_HPP
#define NDL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ndl {

enum class ErrorCode {
    out_of_range,
    self_loop,
    size_limit,
    invalid_switch,
    range,
    not_submultiset,
    invalid_step,
    fallback_exhausted,
    internal_mismatch,
    bad_char,
    truncated,
    parse,
};

const char* error_code_name(ErrorCode c);

// Domain error carrying a machine-checkable code. `detail` holds the
// offending step index for invalid_step, -1 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg, long detail = -1)
        : std::runtime_error(msg), code_(code), detail_(detail) {}

    ErrorCode code() const { return code_; }
    long detail() const { return detail_; }

private:
    ErrorCode code_;
    long detail_;
};

} // namespace ndl

#endif
