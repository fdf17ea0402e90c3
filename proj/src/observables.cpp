#include "nlcs/observables.hpp"

#include <cmath>
#include <numbers>

namespace nlcs {

LadderMoments ladder_moments(const FockExpansion& state) {
    const auto& c = state.coeffs();
    const int top = state.truncation();
    LadderMoments m{Complex(0.0), Complex(0.0), 0.0};
    for (int n = 1; n <= top; ++n) m.a += std::conj(c[n - 1]) * std::sqrt(double(n)) * c[n];
    for (int n = 2; n <= top; ++n)
        m.a2 += std::conj(c[n - 2]) * std::sqrt(double(n) * double(n - 1)) * c[n];
    for (int n = 1; n <= top; ++n) m.n += n * std::norm(c[n]);
    return m;
}

QuadratureReport quadrature_report(const FockExpansion& state,
                                   QuadratureConvention convention) {
    const LadderMoments m = ladder_moments(state);
    // Half convention first; Sqrt2 doubles the variances and scales means by √2.
    const double mean_x = m.a.real();
    const double mean_p = m.a.imag();
    const double xx = 0.25 * (2.0 * m.a2.real() + 2.0 * m.n + 1.0);
    const double pp = 0.25 * (-2.0 * m.a2.real() + 2.0 * m.n + 1.0);
    QuadratureReport r;
    const double scale = (convention == QuadratureConvention::Half) ? 1.0 : 2.0;
    r.mean_x = std::sqrt(scale) * mean_x;
    r.mean_p = std::sqrt(scale) * mean_p;
    r.var_x = scale * (xx - mean_x * mean_x);
    r.var_p = scale * (pp - mean_p * mean_p);
    r.product = r.var_x * r.var_p;
    return r;
}

namespace {

double density_at(const std::vector<Complex>& c, double x) {
    const double phi0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    Complex psi = c[0] * phi0;
    double prev = 0.0;
    double cur = phi0;
    for (std::size_t n = 1; n < c.size(); ++n) {
        const double next =
            x * std::sqrt(2.0 / double(n)) * cur - std::sqrt(double(n - 1) / double(n)) * prev;
        prev = cur;
        cur = next;
        psi += c[n] * cur;
    }
    return std::norm(psi);
}

}  // namespace

std::vector<double> position_density(const FockExpansion& state,
                                     const std::vector<double>& x_grid) {
    std::vector<double> out(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) out[i] = density_at(state.coeffs(), x_grid[i]);
    return out;
}

double position_density_at(const FockExpansion& state, double x) {
    return density_at(state.coeffs(), x);
}

}  // namespace nlcs
