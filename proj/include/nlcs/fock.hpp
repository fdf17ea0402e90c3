#pragma once

#include <complex>
#include <string>
#include <vector>

namespace nlcs {

using Complex = std::complex<double>;

inline constexpr int kDefaultLevels = 40;
inline constexpr double kTailTolerance = 1e-10;

enum class SpectrumKind { Harmonic, Quadratic, LinearQuadratic };

// Deformation function f(n) of a generalized ladder algebra A = a f(a†a)
// together with the derived spectrum e_n = f²(n)·n of A†A.
//
//   Harmonic:        f(n) = 1           e_n = n
//   Quadratic:       f(n) = √n          e_n = n²
//   LinearQuadratic: f(n) = √(A + Bn)   e_n = An + Bn²
//
// The linear-plus-quadratic model needs f²(n) > 0 at every level n ≥ 1,
// which pins B > 0 and A + B > 0; anything else is rejected at construction.
class SpectrumModel {
public:
    SpectrumModel(SpectrumKind kind, double A = 0.0, double B = 0.0);

    static SpectrumModel harmonic() { return SpectrumModel(SpectrumKind::Harmonic); }
    static SpectrumModel quadratic() { return SpectrumModel(SpectrumKind::Quadratic); }
    static SpectrumModel linear_quadratic(double A, double B) {
        return SpectrumModel(SpectrumKind::LinearQuadratic, A, B);
    }

    SpectrumKind kind() const { return kind_; }
    double A() const { return A_; }
    double B() const { return B_; }

    double f2(int n) const;  // f(n)²
    double f(int n) const;
    double e(int n) const;   // e_n = f²(n)·n, so e_0 = 0 in every model

    // ln(e_n!) with e_n! = e_1·e_2·…·e_n and the empty product equal to 1.
    double log_e_factorial(int n) const;
    // Cumulative table [ln(e_0!), …, ln(e_nmax!)]; what the state builders use.
    std::vector<double> log_e_factorials(int nmax) const;

    std::string name() const;

private:
    SpectrumKind kind_;
    double A_ = 0.0;
    double B_ = 0.0;
};

SpectrumModel make_spectrum(SpectrumKind kind, double A = 0.0, double B = 0.0);

// Normalized amplitudes c_0..c_N of a single-mode state in the number basis.
// tail_weight is |last raw term|² / Σ|raw|², a cheap proxy for the
// probability mass lost to truncation.
class FockExpansion {
public:
    // Divides by the Euclidean norm and records the tail weight.
    // Throws std::invalid_argument if every entry is zero.
    static FockExpansion normalize(std::vector<Complex> raw);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Coefficient c_n; zero outside the retained range.
    Complex amp(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : Complex(0.0);
    }

    double tail_weight() const { return tail_weight_; }
    bool converged(double tol = kTailTolerance) const { return tail_weight_ <= tol; }

private:
    FockExpansion(std::vector<Complex> coeffs, double tail_weight)
        : coeffs_(std::move(coeffs)), tail_weight_(tail_weight) {}

    std::vector<Complex> coeffs_;
    double tail_weight_ = 0.0;
};

// Σ conj(c1_n)·c2_n; the shorter expansion is zero-padded.
Complex inner_product(const FockExpansion& s1, const FockExpansion& s2);

}  // namespace nlcs
