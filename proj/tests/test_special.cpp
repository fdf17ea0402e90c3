#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "nlcs/special.hpp"

using namespace nlcs;

namespace {

Complex ipow(Complex base, int n) {
    Complex acc(1.0);
    for (int k = 0; k < n; ++k) acc *= base;
    return acc;
}

// Explicit polynomial form, independent of the recurrence:
//   H_n(x) = n! sum_k (-1)^k / (k! (n-2k)!) (2x)^{n-2k}
Complex hermite_explicit(int n, Complex x) {
    Complex acc(0.0);
    for (int k = 0; 2 * k <= n; ++k) {
        double coeff = std::tgamma(n + 1.0) /
                       (std::tgamma(k + 1.0) * std::tgamma(n - 2 * k + 1.0));
        if (k % 2 == 1) coeff = -coeff;
        acc += coeff * ipow(2.0 * x, n - 2 * k);
    }
    return acc;
}

// Direct term-by-term sum via Pochhammer symbols, used as the 2F1 oracle
// at small n where cancellation cannot bite.
Complex f21_brute(int n, Complex b, Complex c, Complex x) {
    Complex acc(0.0);
    for (int k = 0; k <= n; ++k) {
        Complex term = pochhammer(Complex(double(-n)), k) * pochhammer(b, k) /
                       (pochhammer(c, k) * std::tgamma(k + 1.0));
        acc += term * std::pow(x, double(k));
    }
    return acc;
}

const std::vector<Complex> kGrid = {
    Complex(0.0), Complex(1.0), Complex(-2.3), Complex(0.4, 1.1), Complex(-1.2, -0.5),
    Complex(3.0, 0.25)};

}  // namespace

TEST_CASE("hermite small orders") {
    for (const auto& x : kGrid) {
        CHECK(std::abs(hermite(0, x) - Complex(1.0)) == 0.0);
        CHECK(std::abs(hermite(1, x) - 2.0 * x) == 0.0);
    }
    CHECK(std::abs(hermite(3, Complex(1.0)) - Complex(-4.0)) < 1e-13);
}

TEST_CASE("hermite matches the explicit sum up to n = 12") {
    for (int n = 0; n <= 12; ++n) {
        for (const auto& x : kGrid) {
            const Complex ref = hermite_explicit(n, x);
            const Complex got = hermite(n, x);
            CHECK(std::abs(got - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("hermite parity") {
    for (int n = 0; n <= 30; ++n) {
        for (const auto& x : kGrid) {
            const Complex lhs = hermite(n, -x);
            const Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * hermite(n, x);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("terminating 2F1 small cases") {
    CHECK(std::abs(gauss_2f1_terminating(0, Complex(5.0, 2.0), Complex(0.3), Complex(9.0)) -
                   Complex(1.0)) == 0.0);
    // 1 + (-1*2/1)*2 = -3
    CHECK(std::abs(gauss_2f1_terminating(1, Complex(2.0), Complex(1.0), Complex(2.0)) -
                   Complex(-3.0)) < 1e-14);
    // Three-term sum 1 - 2 + 3/2 = 1/2, pinned as a regression constant.
    CHECK(std::abs(gauss_2f1_terminating(2, Complex(0.5), Complex(1.0), Complex(2.0)) -
                   Complex(0.5)) < 1e-14);
}

TEST_CASE("terminating 2F1 matches the brute-force sum at small n") {
    const std::vector<Complex> bs = {Complex(0.5, 1.3), Complex(-0.7), Complex(2.0, -0.4)};
    const std::vector<Complex> cs = {Complex(1.0), Complex(2.5), Complex(0.75, 0.3)};
    const std::vector<Complex> xs = {Complex(2.0), Complex(-1.1, 0.6), Complex(0.35)};
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : bs)
            for (const auto& c : cs)
                for (const auto& x : xs) {
                    const Complex ref = f21_brute(n, b, c, x);
                    const Complex got = gauss_2f1_terminating(n, b, c, x);
                    CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
                }
}

TEST_CASE("terminating 2F1 survives the x = 2 cancellation") {
    // With b = c the series collapses to sum_k C(n,k)(-x)^k = (1-x)^n, so at
    // x = 2 the alternating ~1e17 terms must cancel to exactly (-1)^n.
    const Complex b(0.7);
    CHECK(std::abs(gauss_2f1_terminating(40, b, b, Complex(2.0)) - Complex(1.0)) < 1e-12);
    CHECK(std::abs(gauss_2f1_terminating(41, b, b, Complex(2.0)) - Complex(-1.0)) < 1e-12);
}

TEST_CASE("terminating 2F1 rejects poles of the lower parameter") {
    CHECK_THROWS_AS(gauss_2f1_terminating(3, Complex(1.0), Complex(0.0), Complex(2.0)),
                    std::domain_error);
    CHECK_THROWS_AS(gauss_2f1_terminating(5, Complex(1.0), Complex(-3.0), Complex(2.0)),
                    std::domain_error);
    // c = -5 with n = 5 stays outside the truncated sum: (c)_k != 0 for k <= 5.
    CHECK_NOTHROW(gauss_2f1_terminating(5, Complex(1.0), Complex(-5.0), Complex(2.0)));
}

TEST_CASE("terminating 2F1 upper-parameter swap") {
    // Both upper parameters non-positive integers: the two truncations agree.
    const Complex c(2.3);
    const Complex x(2.0);
    for (int n = 2; n <= 9; ++n) {
        for (int m = 0; m <= n; ++m) {
            const Complex lhs = gauss_2f1_terminating(n, Complex(double(-m)), c, x);
            const Complex rhs = gauss_2f1_terminating(m, Complex(double(-n)), c, x);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("pochhammer values and recurrence") {
    CHECK(pochhammer(Complex(4.2, -1.0), 0) == Complex(1.0));
    CHECK(std::abs(pochhammer(Complex(1.0), 4) - Complex(24.0)) == 0.0);
    CHECK(std::abs(pochhammer(Complex(1.5), 2) - Complex(3.75)) == 0.0);
    const Complex q(0.3, 0.8);
    for (int n = 0; n <= 20; ++n)
        CHECK(pochhammer(q, n + 1) == pochhammer(q, n) * (q + double(n)));
}

TEST_CASE("log_binomial") {
    CHECK(log_binomial(17, 0) == doctest::Approx(0.0));
    CHECK(log_binomial(4, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
    // Exact integer oracle via the Pascal recurrence.
    unsigned long long pascal[41][41] = {};
    for (int n = 0; n <= 40; ++n) {
        pascal[n][0] = pascal[n][n] = 1;
        for (int q = 1; q < n; ++q) pascal[n][q] = pascal[n - 1][q - 1] + pascal[n - 1][q];
    }
    CHECK(pascal[40][20] == 137846528820ULL);
    CHECK(log_binomial(40, 20) ==
          doctest::Approx(std::log(double(pascal[40][20]))).epsilon(1e-9));
    CHECK_THROWS_AS(log_binomial(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(log_binomial(4, -1), std::invalid_argument);
}
