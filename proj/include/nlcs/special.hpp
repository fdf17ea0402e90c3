#pragma once

#include <complex>

namespace nlcs {

using Complex = std::complex<double>;

// Physicists' Hermite polynomial H_n(x) for complex x, by the recurrence
// H_{k+1} = 2x H_k - 2k H_{k-1}. Values are returned unscaled; callers that
// pair them with factorials are expected to work in log space.
Complex hermite(int n, Complex x);

// Terminating Gauss hypergeometric series 2F1(-n, b; c; x).
// The first parameter -n makes the sum stop after n+1 terms, which is the
// only reason an argument like x = 2 is meaningful here.
struct Terminating2F1 {
    int n = 0;   // series order; first parameter is -n
    Complex b;   // second upper parameter
    Complex c;   // lower parameter; must avoid 0, -1, ..., -(n-1)
    Complex x;   // argument
};

// Finite sum over k = 0..n with term-ratio accumulation
//   t_{k+1}/t_k = (k-n)(b+k) / ((c+k)(k+1)) * x.
// Internally accumulated in double-double arithmetic: the alternating terms
// reach ~1e18 at n = 40 while the sum stays O(1), so plain doubles lose the
// result entirely. Accurate up to n ~ 50.
// Throws std::domain_error when (c)_k vanishes inside the truncated sum.
Complex gauss_2f1_terminating(const Terminating2F1& spec);
Complex gauss_2f1_terminating(int n, Complex b, Complex c, Complex x);

// Rising factorial (q)_n = q(q+1)…(q+n-1), with (q)_0 = 1.
Complex pochhammer(Complex q, int n);

// ln C(n,q) via log-gamma differences. Requires 0 <= q <= n.
double log_binomial(int n, int q);

}  // namespace nlcs
