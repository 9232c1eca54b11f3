#include "ggsim/errors.hpp"

namespace ggsim {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::invalid_domain: return "InvalidDomain";
    case Errc::non_integer_cell_count: return "NonIntegerCellCount";
    case Errc::invalid_time_control: return "InvalidTimeControl";
    case Errc::negative_parameter: return "NegativeParameter";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::jump_outside_domain: return "JumpOutsideDomain";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::zero_pivot: return "ZeroPivot";
    case Errc::non_finite_state: return "NonFiniteState";
    case Errc::cfl_violation: return "CflViolation";
    case Errc::zero_jump: return "ZeroJump";
    case Errc::empty_series: return "EmptySeries";
    case Errc::non_positive_d: return "NonPositiveD";
    case Errc::front_not_found: return "FrontNotFound";
    case Errc::boundary_contamination: return "BoundaryContamination";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_key: return "UnknownKey";
    case Errc::unknown_experiment: return "UnknownExperiment";
    case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

bool errc_is_numerical(Errc code) {
    return code == Errc::zero_pivot || code == Errc::non_finite_state ||
           code == Errc::cfl_violation;
}

} // namespace ggsim
