#pragma once

#include <cstddef>
#include <vector>

namespace ggsim {

/// Tridiagonal linear system A x = rhs with sub/sup holding the off-diagonal
/// bands (lengths n-1) and diag/rhs of length n.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }
    void check_shape() const;
};

/// Thomas algorithm without pivoting. Raises ZeroPivot when elimination hits
/// a vanishing pivot (cannot happen for the diagonally dominant systems the
/// semi-implicit schemes assemble).
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys);

/// Max-norm residual ||A x - rhs||_inf, used to verify solves.
double tridiagonal_residual(const TridiagonalSystem& sys, const std::vector<double>& x);

} // namespace ggsim
