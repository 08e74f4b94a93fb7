#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/permstat.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/xpoly.hpp"

namespace qeuler::verify {

/// Sweep bounds shared by every check. Oracle-backed checks read n_oracle,
/// recurrence-only checks read n_rec; the remaining fields bound the
/// secondary loop variables.
struct Ranges {
  int n_oracle = 7;     // max n where exhaustive enumeration is involved
  int n_rec = 8;        // max n for closed-form / recurrence checks
  int ab_max = 3;       // alpha, beta (and s, t) sweep 0..ab_max
  int r_max = 3;        // r sweeps 1..r_max
  int j_max = 6;        // j sweeps 0..j_max
  int series_order = 10;  // truncation order J for series comparisons
  int enum_cap = kDefaultEnumCap;
};

/// A named check plus the bounds to run it at. Checks are data: the CLI
/// selects subsets by name and overrides bounds without new code paths.
struct CheckSpec {
  std::string name;
  Ranges ranges;
};

struct Counterexample {
  std::string inputs;  // reproducible input assignment, e.g. "n=3 k=1 alpha=0 beta=2"
  std::string lhs;
  std::string rhs;
};

enum class CheckStatus { Pass, Fail, ResourceError, InternalError };

struct CheckResult {
  std::string name;
  std::string description;
  CheckStatus status = CheckStatus::Pass;
  long long instances = 0;  // comparisons executed (stops at the first failure)
  std::optional<Counterexample> counterexample;
  std::string error;
  double millis = 0.0;
};

/// Collects comparisons inside one check; keeps the first (smallest)
/// counterexample. expect_* return false once a failure is recorded so
/// loops can bail out early.
class CheckRecorder {
public:
  bool expect_eq(const QPoly& lhs, const QPoly& rhs, const std::string& inputs);
  bool expect_eq(const XPoly& lhs, const XPoly& rhs, const std::string& inputs);
  bool expect_eq(const Int& lhs, const Int& rhs, const std::string& inputs);
  bool expect_eq(unsigned long long lhs, unsigned long long rhs, const std::string& inputs);
  bool expect_eq(long long lhs, long long rhs, const std::string& inputs);
  bool expect_true(bool ok, const std::string& inputs);

  bool failed() const { return cex_.has_value(); }
  long long instances() const { return instances_; }
  const std::optional<Counterexample>& counterexample() const { return cex_; }

private:
  bool record(bool ok, const std::string& inputs, std::string lhs, std::string rhs);
  long long instances_ = 0;
  std::optional<Counterexample> cex_;
};

struct CheckDef {
  std::string name;
  std::string description;
  bool uses_oracle = false;
  std::function<void(const Ranges&, CheckRecorder&)> body;
};

struct ManifestEntry {
  std::string name;
  std::string description;
  bool uses_oracle = false;
  bool selected = false;
};

struct VerifyReport {
  std::vector<CheckResult> results;
  std::vector<ManifestEntry> manifest;  // full catalog coverage, in catalog order
  bool all_pass() const;
  bool any_resource_error() const;
};

/// The built-in catalog: one check per identity in the suite.
const std::vector<CheckDef>& default_catalog();

/// Every catalog check with default bounds.
std::vector<CheckSpec> default_specs();

/// Runs the selected checks in order against the given catalog (defaults to
/// the built-in one). A failing or erroring check never aborts the rest.
/// Unknown check names throw std::invalid_argument.
VerifyReport run_suite(const std::vector<CheckSpec>& specs);
VerifyReport run_suite(const std::vector<CheckSpec>& specs, const std::vector<CheckDef>& catalog);

/// JSON rendering; byte-identical between runs when include_timing is false.
std::string report_json(const VerifyReport& report, bool include_timing = true);

const char* status_name(CheckStatus s);

}  // namespace qeuler::verify
