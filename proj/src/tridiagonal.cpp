#include "ggsim/tridiagonal.hpp"

#include <cmath>
#include <string>

#include "ggsim/errors.hpp"

namespace ggsim {

void TridiagonalSystem::check_shape() const {
    const std::size_t n = diag.size();
    if (n == 0) fail(Errc::length_mismatch, "empty tridiagonal system");
    if (rhs.size() != n || sub.size() + 1 != n || sup.size() + 1 != n)
        fail(Errc::length_mismatch, "tridiagonal band lengths are inconsistent");
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
    sys.check_shape();
    const std::size_t n = sys.size();

    std::vector<double> c_prime(n, 0.0);
    std::vector<double> x(n, 0.0);

    double pivot = sys.diag[0];
    if (std::abs(pivot) < 1e-300)
        fail(Errc::zero_pivot, "zero pivot at row 0");
    c_prime[0] = (n > 1) ? sys.sup[0] / pivot : 0.0;
    x[0] = sys.rhs[0] / pivot;

    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i - 1] * c_prime[i - 1];
        if (std::abs(pivot) < 1e-300)
            fail(Errc::zero_pivot, "zero pivot at row " + std::to_string(i));
        if (i + 1 < n) c_prime[i] = sys.sup[i] / pivot;
        x[i] = (sys.rhs[i] - sys.sub[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
    return x;
}

double tridiagonal_residual(const TridiagonalSystem& sys, const std::vector<double>& x) {
    sys.check_shape();
    const std::size_t n = sys.size();
    if (x.size() != n) fail(Errc::length_mismatch, "solution length mismatch");
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = sys.diag[i] * x[i];
        if (i > 0) ax += sys.sub[i - 1] * x[i - 1];
        if (i + 1 < n) ax += sys.sup[i] * x[i + 1];
        res = std::max(res, std::abs(ax - sys.rhs[i]));
    }
    return res;
}

} // namespace ggsim
