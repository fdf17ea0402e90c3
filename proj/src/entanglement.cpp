#include "nlcs/entanglement.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "nlcs/states.hpp"

namespace nlcs {

namespace {

constexpr double kEntropyDriftTol = 1e-6;

std::vector<double> log_factorials(int nmax) {
    std::vector<double> lf(nmax + 1, 0.0);
    for (int k = 1; k <= nmax; ++k) lf[k] = lf[k - 1] + std::log(double(k));
    return lf;
}

}  // namespace

BeamSplitterConfig::BeamSplitterConfig(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::invalid_argument("BeamSplitterConfig: theta must lie in [0, pi]");
    if (!std::isfinite(phi)) throw std::invalid_argument("BeamSplitterConfig: phi must be finite");
}

Complex BeamSplitterConfig::t() const { return Complex(std::cos(theta_ / 2.0)); }

Complex BeamSplitterConfig::r() const {
    return -std::exp(Complex(0.0, phi_)) * std::sin(theta_ / 2.0);
}

double BeamSplitterConfig::t_mag2() const {
    const double c = std::cos(theta_ / 2.0);
    return c * c;
}

double BeamSplitterConfig::r_mag2() const {
    const double s = std::sin(theta_ / 2.0);
    return s * s;
}

TwoModeState::TwoModeState(int dim_a, int dim_b)
    : dim_a_(dim_a), dim_b_(dim_b), amps_(std::size_t(dim_a) * dim_b, Complex(0.0)) {
    if (dim_a < 1 || dim_b < 1)
        throw std::invalid_argument("TwoModeState: dimensions must be >= 1");
}

double TwoModeState::total_weight() const {
    double acc = 0.0;
    for (const Complex& a : amps_) acc += std::norm(a);
    return acc;
}

DensityMatrix::DensityMatrix(int dim)
    : dim_(dim), entries_(std::size_t(dim) * dim, Complex(0.0)) {
    if (dim < 1) throw std::invalid_argument("DensityMatrix: dimension must be >= 1");
}

double DensityMatrix::trace() const {
    double acc = 0.0;
    for (int q = 0; q < dim_; ++q) acc += (*this)(q, q).real();
    return acc;
}

double DensityMatrix::purity() const {
    double acc = 0.0;
    for (const Complex& e : entries_) acc += std::norm(e);
    return acc;
}

bool DensityMatrix::psd_within(double tol) const {
    // Cholesky of ρ + tol·1; a negative pivot certifies an eigenvalue < -tol.
    std::vector<Complex> a = entries_;
    const int d = dim_;
    for (int j = 0; j < d; ++j) {
        double pivot = a[std::size_t(j) * d + j].real() + tol;
        for (int k = 0; k < j; ++k) pivot -= std::norm(a[std::size_t(j) * d + k]);
        if (pivot < 0.0) return false;
        const double root = std::sqrt(pivot);
        a[std::size_t(j) * d + j] = root;
        if (root == 0.0) {
            for (int i = j + 1; i < d; ++i) a[std::size_t(i) * d + j] = Complex(0.0);
            continue;
        }
        for (int i = j + 1; i < d; ++i) {
            Complex sum = a[std::size_t(i) * d + j];
            for (int k = 0; k < j; ++k)
                sum -= a[std::size_t(i) * d + k] * std::conj(a[std::size_t(j) * d + k]);
            a[std::size_t(i) * d + j] = sum / root;
        }
    }
    return true;
}

std::vector<Complex> split_fock(int n, const BeamSplitterConfig& cfg) {
    if (n < 0) throw std::invalid_argument("split_fock: n must be >= 0");
    const Complex t = cfg.t();
    const Complex r = cfg.r();
    std::vector<Complex> t_pow(n + 1), r_pow(n + 1);
    t_pow[0] = r_pow[0] = Complex(1.0);
    for (int k = 1; k <= n; ++k) {
        t_pow[k] = t_pow[k - 1] * t;
        r_pow[k] = r_pow[k - 1] * r;
    }
    const std::vector<double> lf = log_factorials(n);
    std::vector<Complex> amps(n + 1);
    for (int q = 0; q <= n; ++q) {
        const double root_binom = std::exp(0.5 * (lf[n] - lf[q] - lf[n - q]));
        amps[q] = root_binom * t_pow[q] * r_pow[n - q];
    }
    return amps;
}

TwoModeState split_state(const FockExpansion& state, const BeamSplitterConfig& cfg) {
    const int top = state.truncation();
    const Complex t = cfg.t();
    const Complex r = cfg.r();
    std::vector<Complex> t_pow(top + 1), r_pow(top + 1);
    t_pow[0] = r_pow[0] = Complex(1.0);
    for (int k = 1; k <= top; ++k) {
        t_pow[k] = t_pow[k - 1] * t;
        r_pow[k] = r_pow[k - 1] * r;
    }
    const std::vector<double> lf = log_factorials(top);
    TwoModeState out(top + 1, top + 1);
    for (int n = 0; n <= top; ++n) {
        const Complex cn = state.coeffs()[n];
        if (cn == Complex(0.0)) continue;
        for (int q = 0; q <= n; ++q) {
            const double root_binom = std::exp(0.5 * (lf[n] - lf[q] - lf[n - q]));
            out.amp(q, n - q) += cn * root_binom * t_pow[q] * r_pow[n - q];
        }
    }
    return out;
}

DensityMatrix reduce_a(const TwoModeState& two_mode) {
    const int da = two_mode.dim_a();
    const int db = two_mode.dim_b();
    DensityMatrix rho(da);
    for (int q = 0; q < da; ++q) {
        for (int s = 0; s <= q; ++s) {
            Complex acc(0.0);
            for (int m = 0; m < db; ++m) acc += two_mode.amp(q, m) * std::conj(two_mode.amp(s, m));
            rho(q, s) = acc;
            rho(s, q) = std::conj(acc);
        }
    }
    return rho;
}

double linear_entropy_matrix(const DensityMatrix& rho) {
    double s = 1.0 - rho.purity();
    if (s < 0.0) {
        if (s < -1e-10)
            std::cerr << "linear_entropy_matrix: clamping entropy " << s << " to 0\n";
        s = 0.0;
    } else if (s > 1.0) {
        if (s > 1.0 + 1e-10)
            std::cerr << "linear_entropy_matrix: clamping entropy " << s << " to 1\n";
        s = 1.0;
    }
    return s;
}

double linear_entropy_series(const FockExpansion& state, const BeamSplitterConfig& cfg) {
    const int top = state.truncation();
    const auto& c = state.coeffs();
    const double t2 = cfg.t_mag2();
    const double r2 = cfg.r_mag2();
    const std::vector<double> lf = log_factorials(top);

    // G[q][m] = √C(q+m, q) |t|^q |r|^m, assembled in log space.
    std::vector<double> g(std::size_t(top + 1) * (top + 1), 0.0);
    const double log_t = (t2 > 0.0) ? 0.5 * std::log(t2) : 0.0;
    const double log_r = (r2 > 0.0) ? 0.5 * std::log(r2) : 0.0;
    for (int q = 0; q <= top; ++q) {
        if (t2 == 0.0 && q > 0) continue;
        for (int m = 0; m + q <= top; ++m) {
            if (r2 == 0.0 && m > 0) continue;
            const double log_binom = 0.5 * (lf[q + m] - lf[q] - lf[m]);
            g[std::size_t(q) * (top + 1) + m] = std::exp(log_binom + q * log_t + m * log_r);
        }
    }
    const auto G = [&](int q, int m) { return g[std::size_t(q) * (top + 1) + m]; };

    // Quadruple sum over (q, s, m, n); the m and n ranges are capped so every
    // coefficient index stays within the truncated expansion.
    Complex purity(0.0);
    for (int q = 0; q <= top; ++q) {
        for (int s = 0; s <= top; ++s) {
            const int cap = top - std::max(q, s);
            Complex inner(0.0);
            for (int m = 0; m <= cap; ++m) {
                const double gm = G(q, m) * G(s, m);
                if (gm == 0.0) continue;
                const Complex left = c[m + q] * std::conj(c[m + s]);
                for (int n = 0; n <= cap; ++n) {
                    const double gn = G(s, n) * G(q, n);
                    if (gn == 0.0) continue;
                    inner += gm * gn * left * c[n + s] * std::conj(c[n + q]);
                }
            }
            purity += inner;
        }
    }
    double s_lin = 1.0 - purity.real();
    if (s_lin < 0.0) s_lin = 0.0;
    if (s_lin > 1.0) s_lin = 1.0;
    return s_lin;
}

namespace {

double entropy_at(const SpectrumModel& model, double z, Complex gamma,
                  const BeamSplitterConfig& cfg, int levels) {
    const FockExpansion state = build_nonlinear_squeezed(Complex(z), gamma, model, levels);
    return linear_entropy_matrix(reduce_a(split_state(state, cfg)));
}

}  // namespace

std::vector<EntropySweepRow> entropy_sweep(const std::vector<SpectrumModel>& models,
                                           const std::vector<double>& z_grid, Complex gamma,
                                           const BeamSplitterConfig& cfg, int levels) {
    if (levels < 1) throw std::invalid_argument("entropy_sweep: levels must be >= 1");
    std::vector<EntropySweepRow> rows;
    rows.reserve(models.size() * z_grid.size());
    for (const SpectrumModel& model : models) {
        for (double z : z_grid) {
            EntropySweepRow row{model, z, gamma, 0.0, false};
            row.entropy = entropy_at(model, z, gamma, cfg, levels);
            const double refined = entropy_at(model, z, gamma, cfg, levels + 10);
            row.converged = std::abs(refined - row.entropy) <= kEntropyDriftTol;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace nlcs
