#include "nlcs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace nlcs {

Complex hermite(int n, Complex x) {
    if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
    if (n == 0) return Complex(1.0);
    Complex prev(1.0);
    Complex cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// Double-double arithmetic (Dekker/Bailey error-free transformations).
// Roughly 31 significant digits; enough headroom for the cancellation in
// the terminating 2F1 sums at x = 2 up to n ~ 50.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, DD{q1, 0.0}));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, DD{q2, 0.0}));
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return dd_add(q, DD{q3, 0.0});
}

struct CDD {
    DD re;
    DD im;
};

inline CDD cdd_from(Complex z) { return {DD{z.real(), 0.0}, DD{z.imag(), 0.0}}; }

inline Complex cdd_to(CDD z) { return Complex(z.re.hi + z.re.lo, z.im.hi + z.im.lo); }

inline CDD cdd_add(CDD a, CDD b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline CDD cdd_mul(CDD a, CDD b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline CDD cdd_div(CDD a, CDD b) {
    DD den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    CDD num = cdd_mul(a, {b.re, dd_neg(b.im)});
    return {dd_div(num.re, den), dd_div(num.im, den)};
}

}  // namespace

Complex gauss_2f1_terminating(const Terminating2F1& spec) {
    return gauss_2f1_terminating(spec.n, spec.b, spec.c, spec.x);
}

Complex gauss_2f1_terminating(int n, Complex b, Complex c, Complex x) {
    if (n < 0) throw std::invalid_argument("gauss_2f1_terminating: n must be >= 0");
    if (c.imag() == 0.0) {
        const double cr = c.real();
        if (cr <= 0.0 && cr == std::round(cr) && -cr <= static_cast<double>(n - 1))
            throw std::domain_error(
                "gauss_2f1_terminating: (c)_k vanishes inside the truncated sum");
    }
    CDD term = cdd_from(Complex(1.0));
    CDD sum = term;
    const CDD xq = cdd_from(x);
    for (int k = 0; k < n; ++k) {
        // b + k and c + k stay exact in double-double components.
        CDD bk = cdd_add(cdd_from(b), cdd_from(Complex(static_cast<double>(k))));
        CDD ck = cdd_add(cdd_from(c), cdd_from(Complex(static_cast<double>(k))));
        CDD num = cdd_mul(cdd_from(Complex(static_cast<double>(k - n))), bk);
        CDD den = cdd_mul(ck, cdd_from(Complex(static_cast<double>(k + 1))));
        term = cdd_mul(cdd_div(cdd_mul(term, num), den), xq);
        sum = cdd_add(sum, term);
    }
    return cdd_to(sum);
}

Complex pochhammer(Complex q, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
    Complex acc(1.0);
    for (int k = 0; k < n; ++k) acc *= q + static_cast<double>(k);
    return acc;
}

double log_binomial(int n, int q) {
    if (q < 0 || q > n) throw std::invalid_argument("log_binomial: need 0 <= q <= n");
    return std::lgamma(n + 1.0) - std::lgamma(q + 1.0) - std::lgamma(n - q + 1.0);
}

}  // namespace nlcs
