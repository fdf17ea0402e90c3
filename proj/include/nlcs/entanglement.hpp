#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "nlcs/fock.hpp"

namespace nlcs {

// Two-port beam splitter with transmission t = cos(θ/2) and reflection
// r = -e^{iφ} sin(θ/2); θ = π/2 is the 50:50 splitter.
class BeamSplitterConfig {
public:
    explicit BeamSplitterConfig(double theta = std::numbers::pi / 2.0, double phi = 0.0);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    Complex t() const;
    Complex r() const;

    // |t|², |r|² straight from θ; carries no trace of φ, so the series
    // entropy path is bit-for-bit phase invariant.
    double t_mag2() const;
    double r_mag2() const;

private:
    double theta_;
    double phi_;
};

// Amplitudes of a two-mode state over |q⟩⊗|m⟩, q the transmitted mode.
class TwoModeState {
public:
    TwoModeState(int dim_a, int dim_b);

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    Complex amp(int q, int m) const { return amps_[std::size_t(q) * dim_b_ + m]; }
    Complex& amp(int q, int m) { return amps_[std::size_t(q) * dim_b_ + m]; }
    double total_weight() const;  // Σ|amp|²

private:
    int dim_a_;
    int dim_b_;
    std::vector<Complex> amps_;
};

// Reduced single-mode density matrix; Hermitian with unit trace for a
// normalized two-mode input.
class DensityMatrix {
public:
    explicit DensityMatrix(int dim);

    int dim() const { return dim_; }
    Complex operator()(int q, int s) const { return entries_[std::size_t(q) * dim_ + s]; }
    Complex& operator()(int q, int s) { return entries_[std::size_t(q) * dim_ + s]; }

    double trace() const;
    double purity() const;  // Σ|ρ_qs|²
    // Cholesky test of ρ + tol·1 ≽ 0, i.e. no eigenvalue below -tol.
    bool psd_within(double tol) const;

private:
    int dim_;
    std::vector<Complex> entries_;
};

// B(|n⟩⊗|0⟩): n+1 amplitudes √C(n,q) t^q r^{n-q} indexed by q.
std::vector<Complex> split_fock(int n, const BeamSplitterConfig& cfg);

// Beam-splitter output for a single-mode input with vacuum on port b.
TwoModeState split_state(const FockExpansion& state, const BeamSplitterConfig& cfg);

// Partial trace over mode b: ρ_a[q][s] = Σ_m amps[q][m]·conj(amps[s][m]).
DensityMatrix reduce_a(const TwoModeState& two_mode);

// Linear entropy S = 1 - Tr(ρ²), clamped to [0, 1].
double linear_entropy_matrix(const DensityMatrix& rho);

// The same entropy evaluated as the quadruple sum over (q, s, m, n) with
// normalized coefficients; exact in |t|², |r|² so φ never enters. Kept as
// an independent route against the partial-trace path.
double linear_entropy_series(const FockExpansion& state, const BeamSplitterConfig& cfg);

struct EntropySweepRow {
    SpectrumModel model;
    double z = 0.0;
    Complex gamma;
    double entropy = 0.0;
    bool converged = false;  // |S(N) - S(N+10)| <= 1e-6
};

// Linear entropy of the beam-splitter output over a real z grid, one row per
// (model, z) in deterministic order. Each point is rebuilt at levels+10 to
// flag truncation non-convergence; failures are recorded, never fatal.
std::vector<EntropySweepRow> entropy_sweep(const std::vector<SpectrumModel>& models,
                                           const std::vector<double>& z_grid, Complex gamma,
                                           const BeamSplitterConfig& cfg, int levels);

}  // namespace nlcs
