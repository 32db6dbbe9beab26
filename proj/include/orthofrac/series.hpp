#ifndef ORTHOFRAC_SERIES_HPP
#define ORTHOFRAC_SERIES_HPP

#include <cstdint>
#include <functional>

namespace orthofrac {

// Result of a (possibly double) series evaluation.
struct SeriesValue {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double err_estimate = 0.0;
    bool converged = false;
};

// Per-call evaluation controls.  The truncation rule is: stop once the
// last term satisfies |term| <= tol * |partial sum| for `quorum`
// consecutive terms (diagonals, for double series), with a hard cap.
struct SeriesOptions {
    double tol = 1e-10;
    std::int64_t max_terms = 1000000;
    int quorum = 3;
};

// Evaluation contract for a user-supplied real function f(x,y).
using ScalarField2D = std::function<double(double, double)>;

}  // namespace orthofrac

#endif
