#pragma once

#include <complex>
#include <vector>

#include "nlcs/fock.hpp"

namespace nlcs {

// First and second ladder-operator moments of a normalized expansion.
struct LadderMoments {
    Complex a;    // ⟨a⟩
    Complex a2;   // ⟨a²⟩
    double n;     // ⟨a†a⟩
};

LadderMoments ladder_moments(const FockExpansion& state);

// Two quadrature normalizations are in circulation:
//   Half:  x = (a+a†)/2,  coherent-state variance 1/4, product floor 1/16
//   Sqrt2: x = (a+a†)/√2, coherent-state variance 1/2, product floor 1/4
enum class QuadratureConvention { Half, Sqrt2 };

struct QuadratureReport {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double product = 0.0;  // var_x · var_p
};

// Variances from the ladder moments via aa† = a†a + 1:
//   ⟨x²⟩ = (1/4)(⟨a²⟩ + conj⟨a²⟩ + 2⟨a†a⟩ + 1) under the Half convention,
// scaled by 2 under Sqrt2.
QuadratureReport quadrature_report(const FockExpansion& state,
                                   QuadratureConvention convention);

// |ψ(x)|² with ψ(x) = Σ c_n φ_n(x), φ_n the harmonic-oscillator
// eigenfunctions; evaluated by the normalized recurrence
//   φ_{n+1} = x√(2/(n+1)) φ_n − √(n/(n+1)) φ_{n-1}
// so nothing overflows at large n.
std::vector<double> position_density(const FockExpansion& state,
                                     const std::vector<double>& x_grid);
double position_density_at(const FockExpansion& state, double x);

}  // namespace nlcs
