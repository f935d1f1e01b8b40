#pragma once
#include "errors.hpp"

namespace qmag {

//! Shared accuracy request for every quadrature-backed computation.
//! rel is a relative target, abs an absolute floor (effectively disabled
//! by default).  Every oracle reports its achieved error next to it.
struct Tolerance {
  double rel = 1e-12;
  double abs = 1e-300;

  Tolerance() = default;
  Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) { validate(); }

  void validate() const {
    if (!(rel > 0.0))
      throw DomainError("Tolerance: rel must be > 0");
    if (!(abs >= 0.0))
      throw DomainError("Tolerance: abs must be >= 0");
  }
};

} // namespace qmag
