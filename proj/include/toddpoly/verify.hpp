#pragma once

#include <string>
#include <vector>

namespace toddpoly {

struct CheckResult {
  std::string name;
  std::string range;  // what was tested, e.g. "k <= 60"
  bool pass = true;
  std::string counterexample;  // first failing input, empty when pass
};

struct SuiteResult {
  std::string name;
  int max_k = 0;  // principal bound the suite ran with
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::vector<std::string> notes;  // informational annotations, never failures
  bool ok() const;
};

/// Suite names in canonical run order:
/// symfunc, series, todd, hirzebruch, bernoulli.
const std::vector<std::string>& verify_suite_names();

/// Default principal bound per suite: symfunc 8, series 10, todd 10,
/// hirzebruch 60, bernoulli 20. Throws std::invalid_argument for an
/// unknown suite.
int verify_default_bound(const std::string& suite);

/// Runs one suite; max_k < 0 selects the default bound. Subsidiary checks
/// scale their own bounds from the principal one (each CheckResult records
/// the range actually tested).
SuiteResult run_suite(const std::string& suite, int max_k);

/// Runs the named suites (empty list = all, in canonical order); max_k < 0
/// keeps per-suite defaults. The report carries the informational notes about
/// known misprints in the classical tables.
VerifyReport run_verify(const std::vector<std::string>& suites, int max_k);

}  // namespace toddpoly
