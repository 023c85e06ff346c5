// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "macb/verify.hpp"

using namespace macb;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // wall-clock ceiling
  std::vector<std::function<SuiteReport(const VerifyConfig&)>> checks;
};

}  // namespace

int main() {
  VerifyConfig cfg;  // seed 1, default grids
  const std::vector<Criterion> all{
      {1, "residue identity, exact, N<=4 parts in [-2,3]", 120, {check_residue_grid}},
      {2, "zero signature gives 1 on both sides, N<=6", 10, {check_zero_signature}},
      {3, "multiplicative operator formula, m in {2,3}, N<=4", 300, {check_multiplicative}},
      {4, "iterated two-variable operators, exact divisions", 120, {check_iterated}},
      {5, "theta=1 Schur collapse and operator identity", 120, {check_schur}},
      {6, "three-variable theta=2 coefficients and closed forms", 60, {check_d_basis}},
      {7, "Jacobi-Trudi expansion and row-factor identities", 180, {check_jacobi_trudi, check_row_factor_identities}},
      {8, "link stochasticity and shift equivariance, N<=5", 120, {check_links}},
      {9, "coherency of generating functions, N<=4", 60, {check_coherency}},
      {10, "boundary mass lower bound, tol 1e-10", 120, {check_mass_bound}},
      {11, "limit function: prelimit 1e-8, generating 1e-6, value at 1, shift", 180, {check_phi}},
      {12, "q-series partial sums 1e-12, finite identity, depth stability", 30, {check_qseries}},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep{c.name};
    std::string err;
    try {
      for (const auto& f : c.checks) rep.merge(f(cfg));
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = err.empty() && rep.ok() && secs <= c.budget_s;
    if (!ok) ++failed;
    std::printf("%s criterion %2d: %s | cases=%ld failed=%ld max_residual=%.3g time=%.2fs\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), rep.cases, rep.failed, rep.max_residual, secs);
    if (!err.empty()) std::printf("     error: %s\n", err.c_str());
    for (const auto& f : rep.failures) std::printf("     %s\n", f.c_str());
    if (secs > c.budget_s) std::printf("     over time budget of %.0fs\n", c.budget_s);
  }
  std::printf("%d of %zu criteria failed\n", failed, all.size());
  return failed == 0 ? 0 : 1;
}
