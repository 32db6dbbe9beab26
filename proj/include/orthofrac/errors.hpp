#ifndef ORTHOFRAC_ERRORS_HPP
#define ORTHOFRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthofrac {

// Base class for all library failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma-family pole hit (non-positive integer argument, vanishing
// Pochhammer denominator, ...).
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument point outside the convergence / continuation region of a series,
// or outside the (s,t) region a kernel formula is valid in.
struct RegionError : Error {
    explicit RegionError(const std::string& msg) : Error(msg) {}
};

// Parameter set violates a stated validity condition (exponent <= -1,
// weight exponent <= -1, degenerate integer difference, bad index, ...).
struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A series that provably diverges for the requested arguments.
struct DivergenceError : Error {
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// Evaluation point (or stencil) outside the domain of a sampled function.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace orthofrac

#endif
