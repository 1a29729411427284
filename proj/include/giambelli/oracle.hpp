#ifndef GIAMBELLI_ORACLE_HPP
#define GIAMBELLI_ORACLE_HPP

#include <functional>

#include "giambelli/symfunc.hpp"
#include "giambelli/zmeasure.hpp"

namespace giambelli {

struct TruncationReport {
  Complex value = 0.0;
  double tail = 0.0;
  int n_max = 0;
  bool converged = false;
};

/// Upper bound on (1-xi)^{zz'} sum_{n>N} g(n) (zz')_n xi^n / n!, obtained by
/// summing a window of explicit terms and dominating the rest geometrically
/// once the term ratio stays below 1.  The default envelope is g(n) = n^m.
double tail_bound_env(const MixedZParams& mp,
                      const std::function<double(long)>& g, int N);
double tail_bound(const MixedZParams& mp, int growth_power, int N);

/// Growth envelope for |H(u)(lambda)| over |lambda| = n: the modified
/// Frobenius coordinates are distinct half-integers, so at most one factor
/// 1/(u - a_i) can be close to singular and the rest are separated by at
/// least 1/2.  Same bound applies to |E(v)| with the roles of a, b swapped.
double he_envelope(const Complex& u, long n);

/// Truncated expectation sum_{|lambda| <= N} f(lambda) M_{z,z',xi}(lambda)
/// with a rigorous tail bound from the caller-certified envelope
/// |f(lambda)| <= g(|lambda|).
TruncationReport brute_expect(
    const std::function<Complex(const Partition&)>& f, const MixedZParams& mp,
    double tol, const std::function<double(long)>& g, int hard_cap = 90);

/// rho_m by direct truncated summation: total mass of lambdas whose lattice
/// configuration contains all the given points.
TruncationReport brute_corr(const std::vector<int>& points2,
                            const MixedZParams& mp, double tol);

/// Residual of the determinantal identity
/// <det[H(u_i)E(v_j)/(u_i+v_j)]> = det[<H(u_i)E(v_j)>/(u_i+v_j)]
/// under the mixed measure, both sides via truncated sums.
/// The worst-case envelope for a d x d determinant of H E entries grows too
/// fast to certify small tails at feasible depths, so the truncation depth is
/// capped explicitly; the returned residual is still the honest difference of
/// the two truncated sides.
double determinantal_identity_check(const std::vector<Complex>& us,
                                    const std::vector<Complex>& vs,
                                    const MixedZParams& mp, double tol,
                                    int hard_cap = 28);

/// The Lemma-style product bound e^{C delta |1/u|} with
/// C = 3 + 2 ln(2 / sin eps), valid for eps < |arg u| < pi - eps.
double he_bound(const Complex& u, double delta, double eps);

/// Monte Carlo average of f over omega-images of M^{(n)} samples
/// (alpha = a/n, beta = b/n, delta = 1); with gamma_mix the point is scaled
/// by an independent Gamma(zz') variable r (delta = r).  Returns
/// (mean, standard error).  Deterministic in (seed); per-sample substreams.
std::pair<Complex, double> mc_expect_omega(
    const std::function<Complex(const OmegaPoint&)>& f, const ZParams& zp,
    int n, int samples, std::uint64_t seed, bool gamma_mix = false);

}  // namespace giambelli

#endif
