#include "ggsim/model.hpp"

#include <cmath>

#include "ggsim/errors.hpp"

namespace ggsim {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::full: return "full";
    case Variant::two_eq: return "two_eq";
    case Variant::one_eq: return "one_eq";
    case Variant::epsilon: return "epsilon";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "full") return Variant::full;
    if (name == "two_eq") return Variant::two_eq;
    if (name == "one_eq") return Variant::one_eq;
    if (name == "epsilon") return Variant::epsilon;
    return std::nullopt;
}

std::size_t variant_field_count(Variant v) {
    switch (v) {
    case Variant::full: return 3;
    case Variant::two_eq: return 2;
    case Variant::one_eq: return 1;
    case Variant::epsilon: return 2;
    }
    return 0;
}

void ModelParams::validate() const {
    if (d < 0.0 || !std::isfinite(d))
        fail(Errc::negative_parameter, "death rate d must be >= 0");
    if (r < 0.0 || !std::isfinite(r))
        fail(Errc::negative_parameter, "growth rate r must be >= 0");

    const bool is_full = variant == Variant::full;
    if (is_full) {
        if (!D) fail(Errc::invalid_params, "full model requires the diffusion constant D");
        if (*D < 0.0 || !std::isfinite(*D))
            fail(Errc::negative_parameter, "diffusion constant D must be >= 0");
        if (!c) fail(Errc::invalid_params, "full model requires the acid rate c");
        if (!(*c > 0.0) || !std::isfinite(*c))
            fail(Errc::invalid_params, "acid rate c must be > 0");
    } else {
        if (D)
            fail(Errc::invalid_params, std::string(variant_name(variant)) +
                                           " is rescaled to unit diffusion; D must not be set");
        if (c)
            fail(Errc::invalid_params,
                 std::string(variant_name(variant)) + " has no acid equation; c must not be set");
    }

    if (variant == Variant::epsilon) {
        if (!epsilon) fail(Errc::invalid_params, "epsilon system requires epsilon");
        if (!(*epsilon > 0.0) || !std::isfinite(*epsilon))
            fail(Errc::invalid_params, "epsilon must be > 0");
    } else if (epsilon) {
        fail(Errc::invalid_params,
             std::string(variant_name(variant)) + " does not take an epsilon parameter");
    }

    // Both reductions absorb the growth rate into the time scale.
    if ((variant == Variant::one_eq || variant == Variant::epsilon) && r != 1.0)
        fail(Errc::invalid_params,
             std::string(variant_name(variant)) + " fixes r = 1; got r = " + std::to_string(r));
}

const char* stability_name(Stability s) {
    switch (s) {
    case Stability::stable: return "Stable";
    case Stability::unstable: return "Unstable";
    case Stability::degenerate: return "Degenerate";
    }
    return "?";
}

const char* equilibrium_name(EquilibriumLabel l) {
    switch (l) {
    case EquilibriumLabel::E0: return "E0";
    case EquilibriumLabel::E1: return "E1";
    case EquilibriumLabel::E2: return "E2";
    case EquilibriumLabel::E3: return "E3";
    }
    return "?";
}

std::vector<Equilibrium> equilibria(double d) {
    if (d < 0.0 || !std::isfinite(d))
        fail(Errc::negative_parameter, "equilibria requires d >= 0");

    Stability e2 = Stability::degenerate;
    Stability e3 = Stability::degenerate;
    if (d > 1.0) {
        e2 = Stability::stable;
        e3 = Stability::unstable;
    } else if (d < 1.0) {
        e2 = Stability::unstable;
        e3 = Stability::stable;
    }

    return {
        {EquilibriumLabel::E0, 0.0, 0.0, Stability::unstable, true},
        {EquilibriumLabel::E1, 1.0, 0.0, Stability::unstable, true},
        {EquilibriumLabel::E2, 0.0, 1.0, e2, true},
        {EquilibriumLabel::E3, 1.0 - d, 1.0, e3, d <= 1.0},
    };
}

} // namespace ggsim
