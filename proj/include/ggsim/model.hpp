#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ggsim {

/// Model variants. `full` couples healthy tissue u, tumour v and excess acid
/// w; `two_eq` is the rescaled u/v reduction with unit tumour diffusion;
/// `one_eq` keeps only v with piecewise-linear degenerate diffusion;
/// `epsilon` is the two-field system with a relaxation time on the u update.
enum class Variant { full, two_eq, one_eq, epsilon };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// Number of fields carried by a state of the given variant (u,v,w -> 3,
/// u,v -> 2, v -> 1).
std::size_t variant_field_count(Variant v);

struct ModelParams {
    Variant variant = Variant::two_eq;
    double d = 0.0; ///< healthy-tissue death rate
    double r = 1.0; ///< tumour growth rate (fixed at 1 for one_eq/epsilon)
    std::optional<double> D;       ///< tumour diffusion constant, full model only
    std::optional<double> c;       ///< acid production/reabsorption rate, full model only
    std::optional<double> epsilon; ///< u-relaxation time, epsilon system only

    /// Rejects parameter sets that do not fit the variant (e.g. D given for
    /// the rescaled two-equation reduction, missing epsilon, r != 1 where the
    /// reduction fixes it).
    void validate() const;
};

enum class Stability { stable, unstable, degenerate };
enum class EquilibriumLabel { E0, E1, E2, E3 };

const char* stability_name(Stability s);
const char* equilibrium_name(EquilibriumLabel l);

/// Spatially homogeneous steady state of the u/v reaction terms. E3 keeps the
/// raw coordinate 1-d even when it is negative; `physical` records whether it
/// sits inside the unit box (d <= 1).
struct Equilibrium {
    EquilibriumLabel label;
    double u;
    double v;
    Stability stability;
    bool physical;
};

/// The four equilibria E0..E3 of the two-field reaction terms with their
/// d-dependent stability. E2 and E3 swap roles at d = 1, where both are
/// reported as degenerate.
std::vector<Equilibrium> equilibria(double d);

} // namespace ggsim
