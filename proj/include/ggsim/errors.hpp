#pragma once

#include <stdexcept>
#include <string>

namespace ggsim {

/// Failure categories surfaced by the library. The CLI maps these onto exit
/// codes: numerical failures (ZeroPivot, NonFiniteState, CflViolation) exit
/// with 2, validation/configuration/IO failures with 1.
enum class Errc {
    invalid_domain,
    non_integer_cell_count,
    invalid_time_control,
    negative_parameter,
    invalid_params,
    jump_outside_domain,
    length_mismatch,
    zero_pivot,
    non_finite_state,
    cfl_violation,
    zero_jump,
    empty_series,
    non_positive_d,
    front_not_found,
    boundary_contamination,
    invalid_spec,
    parse_error,
    unknown_key,
    unknown_experiment,
    io_error,
};

const char* errc_name(Errc code);
bool errc_is_numerical(Errc code);

class SimError : public std::runtime_error {
public:
    SimError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw SimError(code, message);
}

} // namespace ggsim
