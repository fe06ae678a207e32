#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coinqubit {

enum class ErrorCode {
    out_of_range,
    classical_state,
    not_pure,
    not_orthogonal,
    not_hermitian,
    trace_not_one,
    degenerate_superposition,
    degenerate_phase_state,
    degenerate_weights,
    insufficient_data,
    invalid_argument,
};

std::string_view to_string(ErrorCode code);

// All library failures carry a machine-readable code; the CLI maps it to
// its exit status and to the "code" field of the error object.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace coinqubit
