#include "nlcs/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace nlcs {

SpectrumModel::SpectrumModel(SpectrumKind kind, double A, double B) : kind_(kind) {
    if (kind != SpectrumKind::LinearQuadratic) return;  // A, B ignored otherwise
    if (!std::isfinite(A) || !std::isfinite(B))
        throw std::invalid_argument("SpectrumModel: A, B must be finite");
    if (B == 0.0)
        throw std::invalid_argument(
            "SpectrumModel: B = 0 degenerates f(n) = sqrt(A+Bn) to a scaled harmonic model");
    if (B < 0.0 || A + B <= 0.0)
        throw std::invalid_argument(
            "SpectrumModel: need f(n)^2 = A + Bn > 0 for all n >= 1 (B > 0 and A + B > 0)");
    A_ = A;
    B_ = B;
}

SpectrumModel make_spectrum(SpectrumKind kind, double A, double B) {
    return SpectrumModel(kind, A, B);
}

double SpectrumModel::f2(int n) const {
    switch (kind_) {
        case SpectrumKind::Harmonic: return 1.0;
        case SpectrumKind::Quadratic: return static_cast<double>(n);
        case SpectrumKind::LinearQuadratic: return A_ + B_ * n;
    }
    return 0.0;  // unreachable
}

double SpectrumModel::f(int n) const { return std::sqrt(f2(n)); }

double SpectrumModel::e(int n) const { return f2(n) * n; }

double SpectrumModel::log_e_factorial(int n) const {
    if (n < 0) throw std::invalid_argument("log_e_factorial: n must be >= 0");
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += std::log(e(k));
    return acc;
}

std::vector<double> SpectrumModel::log_e_factorials(int nmax) const {
    if (nmax < 0) throw std::invalid_argument("log_e_factorials: nmax must be >= 0");
    std::vector<double> table(nmax + 1, 0.0);
    for (int k = 1; k <= nmax; ++k) table[k] = table[k - 1] + std::log(e(k));
    return table;
}

std::string SpectrumModel::name() const {
    switch (kind_) {
        case SpectrumKind::Harmonic: return "harmonic";
        case SpectrumKind::Quadratic: return "quadratic";
        case SpectrumKind::LinearQuadratic: return "linquad";
    }
    return "unknown";
}

FockExpansion FockExpansion::normalize(std::vector<Complex> raw) {
    if (raw.empty()) throw std::invalid_argument("normalize: empty coefficient list");
    double sum2 = 0.0;
    for (const Complex& c : raw) sum2 += std::norm(c);
    if (sum2 == 0.0) throw std::invalid_argument("normalize: all coefficients are zero");
    const double tail = std::norm(raw.back()) / sum2;
    const double inv_norm = 1.0 / std::sqrt(sum2);
    for (Complex& c : raw) c *= inv_norm;
    return FockExpansion(std::move(raw), tail);
}

Complex inner_product(const FockExpansion& s1, const FockExpansion& s2) {
    const std::size_t n = std::min(s1.size(), s2.size());
    Complex acc(0.0);
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(s1.coeffs()[k]) * s2.coeffs()[k];
    return acc;
}

}  // namespace nlcs
