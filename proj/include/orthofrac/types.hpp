#ifndef ORTHOFRAC_TYPES_HPP
#define ORTHOFRAC_TYPES_HPP

#include "orthofrac/errors.hpp"

#include <string>

namespace orthofrac {

// Jacobi weight x^alpha y^beta (1-x-y)^gamma on the unit simplex,
// normalized so that its integral over the triangle is 1.
struct TriangleWeight {
    double alpha, beta, gamma;

    TriangleWeight(double a, double b, double g) : alpha(a), beta(b), gamma(g) {
        if (a <= -1.0 || b <= -1.0 || g <= -1.0) {
            throw ParameterError("TriangleWeight: exponents must be > -1");
        }
    }
};

// The five (s,t) regions of the first quadrant, plus the empty outside.
enum class RegionTag { I, II, III, IV, V, OUTSIDE };

std::string to_string(RegionTag r);

// Derivative-style parameters of the triangle fractional kernels.
struct DerivativeParams {
    double alpha, beta, gamma;
    int k, n;
    double mu, nu;
};

// The five kernel parameters of the I1..I6 integrals.
struct KernelParams {
    double a, b, c, d, e;

    // a = k+alpha+1, b = n-k+beta+1, c = -mu, d = -nu, e = -n-gamma.
    static KernelParams from_derivative(const DerivativeParams& dp) {
        return {dp.k + dp.alpha + 1.0, dp.n - dp.k + dp.beta + 1.0,
                -dp.mu, -dp.nu, -static_cast<double>(dp.n) - dp.gamma};
    }

    // Inverse of from_derivative for given integer indices.
    DerivativeParams to_derivative(int k, int n) const {
        return {a - k - 1.0, b - (n - k) - 1.0, -e - n, k, n, -c, -d};
    }
};

}  // namespace orthofrac

#endif
