#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/bound.hpp"
#include "hecke/groups.hpp"

namespace hecke {

/// Closed forms checked by the verifier. Tests swap one out for a broken
/// version to exercise the failure path.
struct Formulas {
  std::function<Integer(unsigned, std::int64_t)> gsp_order = order_gsp_modn;
  std::function<Integer(unsigned, std::uint64_t)> gu_order = order_gu;
  std::function<ExactRational(int)> mass = mass_constant;
};

struct VerifyOptions {
  std::uint64_t cutoff = kDefaultEnumerationCutoff;
  Formulas formulas;
};

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t count(CheckStatus status) const;
};

/// Runs the oracle-equivalence and invariant suites, writing one
/// "PASS|FAIL|SKIP <name>: <detail>" line per check to `log` as it goes.
VerifyReport run_verify(const VerifyOptions& options, std::ostream& log);

}  // namespace hecke
