#ifndef GIAMBELLI_VERIFY_HPP
#define GIAMBELLI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace giambelli {

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Averaged Giambelli identity, exact rationals and the floating backend.
SuiteReport verify_giambelli(int max_size = 8);

/// Closed-form Frobenius-Schur averages against the truncated brute-force
/// sums with certified tails.
SuiteReport verify_expect_fs();

/// Two-point averages against brute force, the degree-2/3 determinantal
/// identity, kernel determinants against brute-force correlations, and the
/// jump/factorization identities of the matrix m.
SuiteReport verify_two_point();
SuiteReport verify_det_identity();
SuiteReport verify_kernel_vs_oracle();
SuiteReport verify_jump();

/// Sampler goodness of fit (size law chi^2, one-point correlations).
SuiteReport verify_sampler(int samples = 100000, std::uint64_t seed = 7);

/// Orthogonal polynomial ensembles, everything exact.
SuiteReport verify_ope();

/// Whittaker-side identities and Monte Carlo cross-checks.
SuiteReport verify_whittaker(std::uint64_t seed = 11);

/// Exploratory xi -> 1 scaling comparison; reported, never failing.
SuiteReport verify_scaling();

}  // namespace giambelli

#endif
