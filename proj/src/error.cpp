#include "coinqubit/error.hpp"

namespace coinqubit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::out_of_range: return "out_of_range";
        case ErrorCode::classical_state: return "classical_state";
        case ErrorCode::not_pure: return "not_pure";
        case ErrorCode::not_orthogonal: return "not_orthogonal";
        case ErrorCode::not_hermitian: return "not_hermitian";
        case ErrorCode::trace_not_one: return "trace_not_one";
        case ErrorCode::degenerate_superposition: return "degenerate_superposition";
        case ErrorCode::degenerate_phase_state: return "degenerate_phase_state";
        case ErrorCode::degenerate_weights: return "degenerate_weights";
        case ErrorCode::insufficient_data: return "insufficient_data";
        case ErrorCode::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

}  // namespace coinqubit
