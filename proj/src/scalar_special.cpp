#include "orthofrac/scalar_special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace orthofrac {

double SignedLog::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

SignedLog& SignedLog::operator*=(const SignedLog& o) {
    if (sign == 0 || o.sign == 0) {
        sign = 0;
        log_abs = -std::numeric_limits<double>::infinity();
        return *this;
    }
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& o) {
    if (o.sign == 0) throw PoleError("SignedLog: division by exact zero");
    if (sign == 0) return *this;
    log_abs -= o.log_abs;
    sign *= o.sign;
    return *this;
}

SignedLog signed_log_of(double v) {
    if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
}

bool is_nonpositive_integer(double x, double tol) {
    if (x > 0.5) return false;
    return std::fabs(x - std::round(x)) <= tol;
}

bool near_integer(double x, double tol) {
    return std::fabs(x - std::round(x)) <= tol;
}

SignedLog log_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("log_gamma: pole at x = " + std::to_string(x));
    }
    if (x > 0.0) return {std::lgamma(x), 1};
    // Gamma alternates sign on the negative axis: negative on (-1,0),
    // positive on (-2,-1), ...
    const long long m = static_cast<long long>(std::floor(x));
    const int sign = (m % 2 == 0) ? 1 : -1;
    return {std::lgamma(x), sign};
}

double gamma_fn(double x) { return log_gamma(x).value(); }

double pochhammer(double a, long long shift) {
    if (shift == 0) return 1.0;
    if (shift > 0) {
        double p = 1.0;
        for (long long i = 0; i < shift; ++i) p *= a + static_cast<double>(i);
        return p;
    }
    const long long m = -shift;
    double q = 1.0;
    for (long long i = 0; i < m; ++i) q *= 1.0 - a + static_cast<double>(i);
    if (q == 0.0) {
        throw PoleError("pochhammer: (a)_{-i} identity divides by zero, a = " +
                        std::to_string(a));
    }
    return ((m % 2 == 0) ? 1.0 : -1.0) / q;
}

double pochhammer_real(double a, double b) {
    if (near_integer(b, 1e-12)) {
        return pochhammer(a, static_cast<long long>(std::llround(b)));
    }
    if (is_nonpositive_integer(a + b)) {
        throw PoleError("pochhammer_real: Gamma(a+b) pole");
    }
    if (is_nonpositive_integer(a)) return 0.0;  // 1/Gamma(a) = 0
    return (log_gamma(a + b) / log_gamma(a)).value();
}

SignedLog log_pochhammer(double a, long long shift) {
    if (shift == 0) return {0.0, 1};
    SignedLog r{0.0, 1};
    if (shift > 0) {
        for (long long i = 0; i < shift; ++i) {
            const double f = a + static_cast<double>(i);
            if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
            r.log_abs += std::log(std::fabs(f));
            if (f < 0) r.sign = -r.sign;
        }
        return r;
    }
    const long long m = -shift;
    for (long long i = 0; i < m; ++i) {
        const double f = 1.0 - a + static_cast<double>(i);
        if (f == 0.0) throw PoleError("log_pochhammer: negative-shift pole");
        r.log_abs -= std::log(std::fabs(f));
        if (f < 0) r.sign = -r.sign;
    }
    if (m % 2 != 0) r.sign = -r.sign;
    return r;
}

SignedLog log_beta2(double x, double y) {
    return log_gamma(x) * log_gamma(y) / log_gamma(x + y);
}

SignedLog log_beta3(double x, double y, double z) {
    return log_gamma(x) * log_gamma(y) * log_gamma(z) / log_gamma(x + y + z);
}

double beta2(double x, double y) { return log_beta2(x, y).value(); }
double beta3(double x, double y, double z) { return log_beta3(x, y, z).value(); }

namespace {

// Finite 2F1 sum when a numerator parameter is a non-positive integer.
SeriesValue hyp2f1_terminating(double a, double b, double c, double z,
                               long long nterms) {
    // Denominator pole before the series terminates is a genuine pole.
    if (is_nonpositive_integer(c)) {
        const long long cpole = -static_cast<long long>(std::llround(c));
        if (cpole < nterms) throw PoleError("hyp2f1: (c)_k vanishes before termination");
    }
    double sum = 1.0, term = 1.0;
    for (long long k = 0; k < nterms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
        sum += term;
    }
    return {sum, nterms + 1, 0.0, true};
}

SeriesValue hyp2f1_direct(double a, double b, double c, double z,
                          const SeriesOptions& opts) {
    double sum = 1.0, term = 1.0;
    int ok = 0;
    for (long long k = 0; k < opts.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const double den = (c + kk) * (kk + 1.0);
        if (den == 0.0) throw PoleError("hyp2f1: denominator pole");
        term *= (a + kk) * (b + kk) / den * z;
        sum += term;
        const double rel = std::fabs(term) / std::max(std::fabs(sum), 1e-300);
        if (rel <= opts.tol) {
            if (++ok >= opts.quorum) return {sum, k + 2, rel, true};
        } else {
            ok = 0;
        }
    }
    const double rel = std::fabs(term) / std::max(std::fabs(sum), 1e-300);
    return {sum, opts.max_terms, rel, false};
}

}  // namespace

SeriesValue hyp2f1(double a, double b, double c, double z,
                   const SeriesOptions& opts) {
    if (z == 0.0) return {1.0, 1, 0.0, true};

    long long nterm = -1;
    if (is_nonpositive_integer(a)) nterm = -static_cast<long long>(std::llround(a));
    if (is_nonpositive_integer(b)) {
        const long long nb = -static_cast<long long>(std::llround(b));
        nterm = (nterm < 0) ? nb : std::min(nterm, nb);
    }
    if (nterm >= 0) return hyp2f1_terminating(a, b, c, z, nterm);

    if (is_nonpositive_integer(c)) throw PoleError("hyp2f1: c is a non-positive integer");
    if (z >= 1.0 - 1e-12) {
        throw DivergenceError("hyp2f1: series diverges for z >= 1, z = " +
                              std::to_string(z));
    }

    if (z < 0.0) {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), mapped
        // argument in (0,1).
        SeriesValue inner = hyp2f1(a, c - b, c, z / (z - 1.0), opts);
        inner.value *= std::pow(1.0 - z, -a);
        return inner;
    }
    if (z <= 0.6) return hyp2f1_direct(a, b, c, z, opts);

    const double cab = c - a - b;
    if (!near_integer(cab, 1e-8)) {
        // Connection in 1-z restores fast convergence on 0.6 < z < 1.
        const double w = 1.0 - z;
        const SignedLog g1 = log_gamma(c) * log_gamma(cab) /
                             (log_gamma(c - a) * log_gamma(c - b));
        const SignedLog g2 = log_gamma(c) * log_gamma(-cab) /
                             (log_gamma(a) * log_gamma(b));
        const SeriesValue f1 = hyp2f1(a, b, a + b - c + 1.0, w, opts);
        const SeriesValue f2 = hyp2f1(c - a, c - b, cab + 1.0, w, opts);
        const double t1 = g1.value() * f1.value;
        const double t2 = g2.value() * std::pow(w, cab) * f2.value;
        SeriesValue out;
        out.value = t1 + t2;
        out.terms_used = f1.terms_used + f2.terms_used;
        out.err_estimate = (std::fabs(t1) * f1.err_estimate +
                            std::fabs(t2) * f2.err_estimate) /
                           std::max(std::fabs(out.value), 1e-300);
        out.converged = f1.converged && f2.converged;
        return out;
    }
    // Near-integer c-a-b: the connection coefficients degenerate; the direct
    // series still converges for z < 1, just more slowly.
    return hyp2f1_direct(a, b, c, z, opts);
}

SeriesValue hyp3f2_unit(double a1, double a2, double a3, double b1, double b2,
                        const SeriesOptions& opts) {
    long long nterm = -1;
    for (double p : {a1, a2, a3}) {
        if (is_nonpositive_integer(p)) {
            const long long np = -static_cast<long long>(std::llround(p));
            nterm = (nterm < 0) ? np : std::min(nterm, np);
        }
    }
    if (nterm >= 0) {
        for (double q : {b1, b2}) {
            if (is_nonpositive_integer(q) &&
                -static_cast<long long>(std::llround(q)) < nterm) {
                throw PoleError("hyp3f2_unit: denominator pole before termination");
            }
        }
        double sum = 1.0, term = 1.0;
        for (long long k = 0; k < nterm; ++k) {
            const double kk = static_cast<double>(k);
            term *= (a1 + kk) * (a2 + kk) * (a3 + kk) /
                    ((b1 + kk) * (b2 + kk) * (kk + 1.0));
            sum += term;
        }
        return {sum, nterm + 1, 0.0, true};
    }

    const double excess = b1 + b2 - a1 - a2 - a3;
    if (excess <= 0.0) {
        throw DivergenceError("hyp3f2_unit: parameter excess must be positive, got " +
                              std::to_string(excess));
    }
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2)) {
        throw PoleError("hyp3f2_unit: non-positive integer denominator parameter");
    }

    // Terms decay like k^{-excess-1}; the remaining tail is ~ |t_k| * k / excess.
    double sum = 1.0, term = 1.0;
    int ok = 0;
    for (long long k = 0; k < opts.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a1 + kk) * (a2 + kk) * (a3 + kk) /
                ((b1 + kk) * (b2 + kk) * (kk + 1.0));
        sum += term;
        const double tail = std::fabs(term) * std::max(1.0, (kk + 1.0) / excess);
        const double rel = tail / std::max(std::fabs(sum), 1e-300);
        if (rel <= opts.tol) {
            if (++ok >= opts.quorum) return {sum, k + 2, rel, true};
        } else {
            ok = 0;
        }
    }
    const double tail = std::fabs(term) * std::max(1.0, static_cast<double>(opts.max_terms) / excess);
    const double rel = tail / std::max(std::fabs(sum), 1e-300);
    return {sum, opts.max_terms, rel, false};
}

}  // namespace orthofrac
