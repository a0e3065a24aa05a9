#pragma once

// Invariant suites behind the `verify` verb: every analytic identity the
// construction rests on, each reported as a named residual against a fixed
// tolerance.  The acceptance harness reuses these by id prefix.

#include <string>
#include <vector>

namespace hahn {

struct InvariantResult {
  std::string id;      // descriptive, dot-separated
  double residual;     // worst residual observed over the check's point set
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  std::string filter;       // substring match on the id; empty = all
  bool inject_bug = false;  // negative control: flips a cut-side sign
};

std::vector<InvariantResult> run_verification(const VerifyOptions& opt);

}  // namespace hahn
