#pragma once
#include <stdexcept>
#include <string>

namespace qmag {

// Input outside a function's mathematical domain (non-finite argument,
// negative smearing width, t < 0, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input is in-domain but outside the validity regime of the requested
// method (asymptotic form at small argument, oscillation frequency beyond
// what the segmented integrator handles, ...).
struct RegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

// A quadrature failed to converge, or an integral is genuinely divergent
// for the supplied spectral weight.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A momentum-space current violates transversality k.J(k) = 0.
struct InvalidCurrentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace qmag
