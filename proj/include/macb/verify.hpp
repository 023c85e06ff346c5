#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace macb {

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  long cases = 0;
  long passed = 0;
  long failed = 0;
  double max_residual = 0;
  uint64_t seed = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  void record(bool ok, const std::string& what, double residual = 0);
  void merge(const SuiteReport& o);
  bool ok() const { return failed == 0 && cases > 0; }
};

struct VerifyConfig {
  uint64_t seed = 1;
  int points = 0;  // 0: check default
  int max_N = 0;   // 0: check default
};

// Individual checks; each one is a full identity sweep at fixed sizes.
SuiteReport check_residue_grid(const VerifyConfig& cfg);
SuiteReport check_zero_signature(const VerifyConfig& cfg);
SuiteReport check_multiplicative(const VerifyConfig& cfg);
SuiteReport check_iterated(const VerifyConfig& cfg);
SuiteReport check_schur(const VerifyConfig& cfg);
SuiteReport check_d_basis(const VerifyConfig& cfg);
SuiteReport check_jacobi_trudi(const VerifyConfig& cfg);
SuiteReport check_row_factor_identities(const VerifyConfig& cfg);
SuiteReport check_links(const VerifyConfig& cfg);
SuiteReport check_coherency(const VerifyConfig& cfg);
SuiteReport check_mass_bound(const VerifyConfig& cfg);
SuiteReport check_phi(const VerifyConfig& cfg);
SuiteReport check_qseries(const VerifyConfig& cfg);

// CLI suites: residue, multiplicative, jacobitrudi, links, phi, example44,
// appendixB, qseries, all. Throws ParseError on an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);
const std::vector<std::string>& suite_names();

}  // namespace macb
