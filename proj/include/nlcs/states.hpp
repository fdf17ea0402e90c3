#pragma once

#include <complex>
#include <vector>

#include "nlcs/fock.hpp"

namespace nlcs {

// Solution table of the squeezed-state three-term recurrence
//   I_{n+1} = z I_n - gamma n f²(n) I_{n-1},   I_0 = 1, I_1 = z,
// for n = 0..N. Entries grow factorially for f ≡ 1, so each one is stored
// as mantissa·exp(log_scale); the iteration renormalizes every few steps
// and accumulates the scaling in log_scale.
class RecurrenceTable {
public:
    int truncation() const { return static_cast<int>(entries_.size()) - 1; }
    Complex z() const { return z_; }
    Complex gamma() const { return gamma_; }
    const SpectrumModel& model() const { return model_; }

    Complex mantissa(int n) const { return entries_[n].mantissa; }
    double log_scale(int n) const { return entries_[n].log_scale; }

    // ln|I_n|; -inf when I_n = 0.
    double log_abs(int n) const;

    // I_n itself. Overflows to inf once ln|I_n| exceeds ~709.
    Complex value(int n) const;

    // I_n·exp(log_offset); the overflow-safe accessor the builders use with
    // log_offset = -ln(e_n!)/2 - shift.
    Complex rescaled(int n, double log_offset) const;

private:
    friend RecurrenceTable solve_recurrence(Complex z, Complex gamma,
                                            const SpectrumModel& model, int levels);
    struct Entry {
        Complex mantissa;
        double log_scale;
    };

    RecurrenceTable(std::vector<Entry> entries, Complex z, Complex gamma, SpectrumModel model)
        : entries_(std::move(entries)), z_(z), gamma_(gamma), model_(std::move(model)) {}

    std::vector<Entry> entries_;
    Complex z_;
    Complex gamma_;
    SpectrumModel model_;
};

// Forward iteration of the recurrence with exact seeds I_0 = 1, I_1 = z.
// Requires levels >= 1.
RecurrenceTable solve_recurrence(Complex z, Complex gamma, const SpectrumModel& model,
                                 int levels);

// Canonical coherent state: raw terms zⁿ/√(n!), then normalized.
FockExpansion build_coherent_canonical(Complex z, int levels = kDefaultLevels);

// Canonical squeezed state: raw terms (γ/2)^{n/2} H_n(z/√(2γ)) / √(n!).
// Requires 0 < |γ| < 1; use build_coherent_canonical for γ = 0.
FockExpansion build_squeezed_canonical(Complex z, Complex gamma, int levels = kDefaultLevels);

// Nonlinear coherent state: raw terms zⁿ/√(e_n!).
FockExpansion build_nonlinear_coherent(Complex z, const SpectrumModel& model,
                                       int levels = kDefaultLevels);

// Nonlinear squeezed state: raw terms I(z,γ,n)/√(e_n!) from the recurrence.
// Requires |γ| < 1 and levels >= 1; γ = 0 reduces to the coherent build.
FockExpansion build_nonlinear_squeezed(Complex z, Complex gamma, const SpectrumModel& model,
                                       int levels = kDefaultLevels);

// Closed form of I(z,γ,n) for the quadratic model f(n) = √n:
//   iⁿ γ^{n/2} n! · 2F1(-n, 1/2 + iz/(2√γ); 1; 2),
// principal branches throughout. Requires γ ≠ 0 (use the recurrence there).
// An independent check on solve_recurrence, not the primary path.
Complex closed_form_quadratic(Complex z, Complex gamma, int n);

// Closed form of I(z,γ,n) for f(n) = √(A+Bn):
//   iⁿ (γB)^{n/2} (1+A/B)^{(n)} · 2F1(-n, 1/2 + A/(2B) + iz/(2√(γB)); 1+A/B; 2),
// with the Pochhammer prefactor accumulated in log space. Requires γ ≠ 0 and
// a valid LinearQuadratic parameter pair.
Complex closed_form_linear_quadratic(Complex z, Complex gamma, double A, double B, int n);

}  // namespace nlcs
