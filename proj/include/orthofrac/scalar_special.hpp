#ifndef ORTHOFRAC_SCALAR_SPECIAL_HPP
#define ORTHOFRAC_SCALAR_SPECIAL_HPP

#include "orthofrac/errors.hpp"
#include "orthofrac/series.hpp"

namespace orthofrac {

// A real quantity stored as log|value| plus its sign.  Gamma-family
// prefactors multiply many Gamma values, so products are accumulated in
// log space and exponentiated once.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;  // +1, -1, or 0 for an exact zero

    double value() const;
    SignedLog& operator*=(const SignedLog& o);
    SignedLog& operator/=(const SignedLog& o);
    friend SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }
    friend SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }
};

SignedLog signed_log_of(double v);

bool is_nonpositive_integer(double x, double tol = 1e-12);
bool near_integer(double x, double tol = 1e-9);

// log|Gamma(x)| with the sign of Gamma(x).  Throws PoleError at
// non-positive integers.
SignedLog log_gamma(double x);

// Gamma(x) itself; overflows to +/-inf for x beyond ~171.
double gamma_fn(double x);

// Rising factorial (a)_i for integer shift.  Non-negative shifts are the
// exact finite product; negative shifts use (a)_{-i} = (-1)^i / (1-a)_i.
double pochhammer(double a, long long shift);

// (a)_b = Gamma(a+b)/Gamma(a) for real shift.  Integer shifts within
// 1e-12 are routed to the exact product.
double pochhammer_real(double a, double b);

// Signed log of (a)_i, integer shift.  sign 0 when the product vanishes.
SignedLog log_pochhammer(double a, long long shift);

// B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y) and the three-argument extension
// B(x,y,z) = Gamma(x)Gamma(y)Gamma(z)/Gamma(x+y+z).
double beta2(double x, double y);
double beta3(double x, double y, double z);
SignedLog log_beta2(double x, double y);
SignedLog log_beta3(double x, double y, double z);

// Gauss hypergeometric series 2F1(a,b;c;z) for real z < 1, or any z when
// the series terminates.  For 0.5 < z < 1 a connection formula in 1-z is
// used when c-a-b is not close to an integer; negative z goes through the
// Pfaff transformation first.
SeriesValue hyp2f1(double a, double b, double c, double z,
                   const SeriesOptions& opts = {});

// 3F2(a1,a2,a3; b1,b2; 1).  Requires parameter excess
// b1+b2-a1-a2-a3 > 0 unless the series terminates; the tail estimate uses
// the algebraic decay rate of the terms.
SeriesValue hyp3f2_unit(double a1, double a2, double a3, double b1, double b2,
                        const SeriesOptions& opts = {});

}  // namespace orthofrac

#endif
