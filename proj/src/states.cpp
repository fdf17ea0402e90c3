#include "nlcs/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nlcs/special.hpp"

namespace nlcs {

namespace {

constexpr int kRenormStride = 10;

// Assembles raw terms mantissa[n]·exp(log_scale[n]), shifting all scales by
// the common maximum so the largest term is O(1), then normalizes.
FockExpansion normalize_scaled(const std::vector<Complex>& mantissas,
                               const std::vector<double>& log_scales) {
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < mantissas.size(); ++n) {
        const double mag = std::abs(mantissas[n]);
        if (mag > 0.0) shift = std::max(shift, log_scales[n] + std::log(mag));
    }
    if (!std::isfinite(shift))
        throw std::invalid_argument("normalize_scaled: all coefficients are zero");
    std::vector<Complex> raw(mantissas.size());
    for (std::size_t n = 0; n < mantissas.size(); ++n)
        raw[n] = mantissas[n] * std::exp(log_scales[n] - shift);
    return FockExpansion::normalize(std::move(raw));
}

}  // namespace

double RecurrenceTable::log_abs(int n) const {
    const double mag = std::abs(entries_[n].mantissa);
    if (mag == 0.0) return -std::numeric_limits<double>::infinity();
    return entries_[n].log_scale + std::log(mag);
}

Complex RecurrenceTable::value(int n) const {
    return entries_[n].mantissa * std::exp(entries_[n].log_scale);
}

Complex RecurrenceTable::rescaled(int n, double log_offset) const {
    return entries_[n].mantissa * std::exp(entries_[n].log_scale + log_offset);
}

RecurrenceTable solve_recurrence(Complex z, Complex gamma, const SpectrumModel& model,
                                 int levels) {
    if (levels < 1) throw std::invalid_argument("solve_recurrence: levels must be >= 1");
    std::vector<RecurrenceTable::Entry> entries(levels + 1);
    entries[0] = {Complex(1.0), 0.0};
    entries[1] = {z, 0.0};
    Complex prev(1.0);
    Complex cur = z;
    double log_scale = 0.0;
    for (int n = 1; n < levels; ++n) {
        Complex next = z * cur - gamma * (n * model.f2(n)) * prev;
        prev = cur;
        cur = next;
        if ((n + 1) % kRenormStride == 0) {
            const double s = std::max(std::abs(cur), std::abs(prev));
            if (s > 0.0) {
                cur /= s;
                prev /= s;
                log_scale += std::log(s);
            }
        }
        entries[n + 1] = {cur, log_scale};
    }
    return RecurrenceTable(std::move(entries), z, gamma, model);
}

FockExpansion build_coherent_canonical(Complex z, int levels) {
    if (levels < 0) throw std::invalid_argument("build_coherent_canonical: levels must be >= 0");
    std::vector<Complex> raw(levels + 1);
    raw[0] = Complex(1.0);
    for (int n = 1; n <= levels; ++n) raw[n] = raw[n - 1] * z / std::sqrt(double(n));
    return FockExpansion::normalize(std::move(raw));
}

FockExpansion build_squeezed_canonical(Complex z, Complex gamma, int levels) {
    if (levels < 0) throw std::invalid_argument("build_squeezed_canonical: levels must be >= 0");
    const double g = std::abs(gamma);
    if (g == 0.0)
        throw std::invalid_argument(
            "build_squeezed_canonical: gamma = 0 is the coherent state; use "
            "build_coherent_canonical");
    if (g >= 1.0)
        throw std::invalid_argument("build_squeezed_canonical: requires |gamma| < 1");

    const Complex alpha = z / std::sqrt(2.0 * gamma);
    const Complex log_half_gamma = std::log(gamma / 2.0);
    std::vector<Complex> raw(levels + 1);
    Complex h_prev(0.0);
    Complex h_cur(1.0);  // H_0
    for (int n = 0; n <= levels; ++n) {
        if (n >= 1) {
            Complex h_next = 2.0 * alpha * h_cur - 2.0 * double(n - 1) * h_prev;
            h_prev = h_cur;
            h_cur = h_next;
        }
        // (γ/2)^{n/2} / √(n!) on the principal branch, assembled in log space.
        const Complex prefactor =
            std::exp(0.5 * double(n) * log_half_gamma - 0.5 * std::lgamma(n + 1.0));
        raw[n] = prefactor * h_cur;
    }
    return FockExpansion::normalize(std::move(raw));
}

FockExpansion build_nonlinear_coherent(Complex z, const SpectrumModel& model, int levels) {
    if (levels < 0) throw std::invalid_argument("build_nonlinear_coherent: levels must be >= 0");
    const std::vector<double> lef = model.log_e_factorials(levels);
    std::vector<Complex> mantissas(levels + 1);
    std::vector<double> log_scales(levels + 1, 0.0);
    const double mag = std::abs(z);
    if (mag == 0.0) {
        mantissas[0] = Complex(1.0);
        return normalize_scaled(mantissas, log_scales);
    }
    const Complex phase = z / mag;
    const double log_mag = std::log(mag);
    Complex phase_n(1.0);
    for (int n = 0; n <= levels; ++n) {
        mantissas[n] = phase_n;
        log_scales[n] = n * log_mag - 0.5 * lef[n];
        phase_n *= phase;
    }
    return normalize_scaled(mantissas, log_scales);
}

FockExpansion build_nonlinear_squeezed(Complex z, Complex gamma, const SpectrumModel& model,
                                       int levels) {
    if (levels < 1) throw std::invalid_argument("build_nonlinear_squeezed: levels must be >= 1");
    if (gamma == Complex(0.0)) return build_nonlinear_coherent(z, model, levels);
    if (std::abs(gamma) >= 1.0)
        throw std::invalid_argument("build_nonlinear_squeezed: requires |gamma| < 1");
    const RecurrenceTable table = solve_recurrence(z, gamma, model, levels);
    const std::vector<double> lef = model.log_e_factorials(levels);
    std::vector<Complex> mantissas(levels + 1);
    std::vector<double> log_scales(levels + 1);
    for (int n = 0; n <= levels; ++n) {
        mantissas[n] = table.mantissa(n);
        log_scales[n] = table.log_scale(n) - 0.5 * lef[n];
    }
    return normalize_scaled(mantissas, log_scales);
}

namespace {

Complex int_pow(Complex base, int n) {
    Complex acc(1.0);
    for (int k = 0; k < n; ++k) acc *= base;
    return acc;
}

}  // namespace

Complex closed_form_quadratic(Complex z, Complex gamma, int n) {
    if (n < 0) throw std::invalid_argument("closed_form_quadratic: n must be >= 0");
    if (gamma == Complex(0.0))
        throw std::domain_error("closed_form_quadratic: gamma = 0; use the recurrence path");
    const Complex root = std::sqrt(gamma);
    const Complex b = Complex(0.5) + Complex(0.0, 1.0) * z / (2.0 * root);
    const Complex f1 = gauss_2f1_terminating(n, b, Complex(1.0), Complex(2.0));
    // iⁿ γ^{n/2} with both factors on the principal branch of √γ.
    const Complex prefactor = int_pow(Complex(0.0, 1.0) * root, n) * std::tgamma(n + 1.0);
    return prefactor * f1;
}

Complex closed_form_linear_quadratic(Complex z, Complex gamma, double A, double B, int n) {
    if (n < 0) throw std::invalid_argument("closed_form_linear_quadratic: n must be >= 0");
    if (gamma == Complex(0.0))
        throw std::domain_error("closed_form_linear_quadratic: gamma = 0; use the recurrence path");
    SpectrumModel::linear_quadratic(A, B);  // validates B != 0, A + Bn > 0
    const Complex root = std::sqrt(gamma * B);
    const double ratio = A / B;
    const Complex b = Complex(0.5 + 0.5 * ratio) + Complex(0.0, 1.0) * z / (2.0 * root);
    const Complex c = Complex(1.0 + ratio);
    const Complex f1 = gauss_2f1_terminating(n, b, c, Complex(2.0));
    // (1 + A/B)^{(n)} is real and positive for every valid model.
    const double log_poch = std::lgamma(1.0 + ratio + n) - std::lgamma(1.0 + ratio);
    return int_pow(Complex(0.0, 1.0) * root, n) * std::exp(log_poch) * f1;
}

}  // namespace nlcs
