#include "ggsim/state.hpp"

#include <algorithm>
#include <string>

#include "ggsim/errors.hpp"

namespace ggsim {

FieldState riemann_initial(const Grid1D& grid, Variant variant,
                           const std::vector<double>& left_state,
                           const std::vector<double>& right_state, double x_jump) {
    const std::size_t nf = variant_field_count(variant);
    if (left_state.size() != nf || right_state.size() != nf)
        fail(Errc::length_mismatch, std::string("Riemann states for ") + variant_name(variant) +
                                        " need " + std::to_string(nf) + " components");
    if (!(x_jump > grid.x_left && x_jump < grid.x_right))
        fail(Errc::jump_outside_domain,
             "x_jump = " + std::to_string(x_jump) + " must lie strictly inside the domain");

    const std::size_t n = grid.n_cells;
    FieldState s;
    s.t = 0.0;
    s.v.resize(n);
    if (nf >= 2) s.u.resize(n);
    if (nf == 3) s.w = std::vector<double>(n);

    for (std::size_t i = 0; i < n; ++i) {
        const bool left = grid.cell_center(i) < x_jump;
        const std::vector<double>& st = left ? left_state : right_state;
        if (nf == 1) {
            s.v[i] = st[0];
        } else {
            s.u[i] = st[0];
            s.v[i] = st[1];
            if (nf == 3) (*s.w)[i] = st[2];
        }
    }
    return s;
}

std::vector<double> recover_healthy(const std::vector<double>& v, double d) {
    if (d < 0.0) fail(Errc::negative_parameter, "recover_healthy requires d >= 0");
    std::vector<double> u(v.size());
    std::transform(v.begin(), v.end(), u.begin(),
                   [d](double vi) { return std::max(1.0 - d * vi, 0.0); });
    return u;
}

RiemannStates canonical_invasion_states(Variant variant, double d) {
    const double u_left = std::max(1.0 - d, 0.0);
    switch (variant) {
    case Variant::one_eq: return {{1.0}, {0.0}};
    case Variant::two_eq:
    case Variant::epsilon: return {{u_left, 1.0}, {1.0, 0.0}};
    case Variant::full: return {{u_left, 1.0, 1.0}, {1.0, 0.0, 0.0}};
    }
    fail(Errc::invalid_spec, "unknown variant");
}

} // namespace ggsim
