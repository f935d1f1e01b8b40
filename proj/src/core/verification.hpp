#pragma once
#include "current_model.hpp"
#include "tolerance.hpp"

#include <string>
#include <vector>

namespace qmag {

//! One named self-check: closed form vs independent oracle, or a
//! structural identity.  `observed` is the worst metric found, compared
//! against `threshold`; `converged` reports whether every quadrature
//! behind the check reached its requested tolerance.
struct CheckResult {
  std::string name;
  bool passed = false;
  bool converged = true;
  double observed = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyOptions {
  Tolerance tol;
  std::string only; // run only checks whose name contains this substring
  bool include_lattice = true; // the lattice study dominates the runtime
};

//! Run the oracle/closed-form/lattice suite for the given dipole.
std::vector<CheckResult> run_verification(const DipoleCurrent &c,
                                          const VerifyOptions &opts = {});

//! Names of all checks, in execution order.
std::vector<std::string> verification_check_names();

//! Plain-text report: one line per check plus the integral-family table.
std::string format_verification_report(const std::vector<CheckResult> &results);

} // namespace qmag
