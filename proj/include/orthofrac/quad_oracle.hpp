#ifndef ORTHOFRAC_QUAD_ORACLE_HPP
#define ORTHOFRAC_QUAD_ORACLE_HPP

#include "orthofrac/series.hpp"
#include "orthofrac/types.hpp"

#include <utility>
#include <vector>

namespace orthofrac::quad {

// Gauss-Jacobi rule on (-1,1) for the weight (1-x)^alpha (1+x)^beta.
struct JacobiRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // positive
    double alpha = 0.0, beta = 0.0;
};

// Golub-Welsch construction; results are cached by (n, alpha, beta).
// The cache is safe for concurrent readers with single-writer insertion.
const JacobiRule& gauss_jacobi_rule(int n_nodes, double alpha, double beta);

// Generic 1-D rule: nodes/weights with any absorbed weight factors.
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Rule on (lo,hi) absorbing (u-lo)^{p_lo} (hi-u)^{p_hi}.
Rule1D rule_on_interval(int n, double lo, double hi, double p_lo, double p_hi);

// Composite Gauss rule on (lo,hi) with geometric grading toward the
// flagged endpoints.  Handles arbitrary integrable endpoint behavior, at
// the price of more nodes; used where mixed endpoint exponents preclude a
// single Gauss-Jacobi exponent placement.
Rule1D graded_rule(int pts_per_cell, int levels, double lo, double hi,
                   bool grade_lo, bool grade_hi, double ratio = 0.25,
                   double floor_frac = 1e-12);

// Product Duffy rule for the normalized simplex weight W_{alpha,beta,gamma};
// sum of weights equals 1 up to rounding.
struct TriangleRule {
    std::vector<double> x, y, w;  // flattened node list
};
TriangleRule triangle_rule(int n_nodes, const TriangleWeight& tw);

// Integral of f against the normalized weight W_{alpha,beta,gamma} over
// the unit simplex.
double integrate_triangle(const ScalarField2D& f, const TriangleWeight& tw,
                          int n_nodes);

// Central-difference estimate of d^{m+l} f / dx^m dy^l, O(h^2), m+l <= 4.
double finite_diff_partial(const ScalarField2D& f, double x, double y, int m,
                           int l, double h);

// Brute-force evaluation of the defining kernel integrals by nested
// Gauss-Jacobi quadrature with endpoint singularities absorbed into the
// rules (interior kinks and the corner of region V are split off so every
// 1-D leg sees endpoint singularities only).  Requires the positivity the
// integrals need to converge: a,b > 0 everywhere; c > 0 for regions I,
// III, V; d > 0 for regions I, IV; e < 1 for regions II..V; e < c+1 in
// region V.
double integrate_kernel_region(RegionTag region, const KernelParams& p,
                               double s, double t, int n_nodes);

// Region-V components I5 and I6 separately (their sum is the region-V value).
std::pair<double, double> integrate_kernel_i5_i6(const KernelParams& p,
                                                 double s, double t,
                                                 int n_nodes);

// Same integrals in the derivative form: the pre-integration-by-parts
// integrand (s-u)^{k-mu-1} (t-v)^{n-k-nu-1} U_{k,n}(u,v) u^alpha v^beta
// (1-u-v)^gamma, rescaled so the result matches the closed-form I_r at the
// mapped (a..e).  Valid for k-mu > 0, n-k-nu > 0, exponents > -1; this is
// the oracle for fractional-derivative parameter sets where the (a..e)
// form integrals do not converge classically.
double integrate_kernel_region_from_derivative(RegionTag region,
                                               const DerivativeParams& dp,
                                               double s, double t,
                                               int n_nodes);

// Independent evaluation of the Appell-side polynomial U_{k,n} used by the
// derivative-form oracle: explicit Leibniz expansion of the Rodrigues
// formula, sharing no code with the production basis module.
double u_poly_rodrigues_sum(int k, int n, double alpha, double beta,
                            double gamma, double x, double y);

}  // namespace orthofrac::quad

#endif
