#ifndef GIAMBELLI_ZMEASURE_HPP
#define GIAMBELLI_ZMEASURE_HPP

#include <cstdint>
#include <random>
#include <string>

#include "giambelli/numeric.hpp"
#include "giambelli/partition.hpp"

namespace giambelli {

/// Admissible parameter pair (z, z').  Either z' = conj(z) with z off the
/// real axis (principal series), or z, z' real lying strictly between two
/// consecutive integers m < z, z' < m+1 (complementary series).
struct ZParams {
  bool principal = false;
  bool exact = false;   // z, z' rational (complementary only)
  Rational zr, zpr;     // set when exact
  Complex z, zp;

  /// zz' (always real and positive for admissible parameters).
  double zzp() const { return (z * zp).real(); }
  Rational zzp_exact() const;

  static ZParams make(const Complex& z, const Complex& zp);
  static ZParams make_exact(const Rational& z, const Rational& zp);
  static ZParams parse(const std::string& z, const std::string& zp);
};

struct MixedZParams {
  ZParams base;
  double xi = 0.0;
  bool xi_exact = false;
  Rational xi_r;

  bool exact() const { return base.exact && xi_exact; }

  static MixedZParams make(const ZParams& base, double xi);
  static MixedZParams make_exact(const ZParams& base, const Rational& xi);
  static MixedZParams parse(const std::string& z, const std::string& zp,
                            const std::string& xi);
};

// ---------------------------------------------------------------------------
// Fixed-size z-measure M^{(n)} on partitions of n and its mixture.
// ---------------------------------------------------------------------------

/// M^{(n)}(lambda) = prod_boxes (z+c)(z'+c) / (zz')_n * (dim lambda)^2 / n!.
Rational weight_n_exact(const Partition& lambda, const ZParams& zp);
double weight_n(const Partition& lambda, const ZParams& zp);

/// Mixed measure M_{z,z',xi}(lambda) = M^{(n)}(lambda) (1-xi)^{zz'}
/// (zz')_n xi^n / n!.
double weight_mixed(const Partition& lambda, const MixedZParams& mp);

/// weight_mixed(lambda) / weight_mixed(empty), free of the (1-xi)^{zz'}
/// prefactor and hence exactly rational for rational inputs.
Rational weight_mixed_ratio_exact(const Partition& lambda,
                                  const MixedZParams& mp);

// ---------------------------------------------------------------------------
// Closed-form averages and the averaged Giambelli identity.
// ---------------------------------------------------------------------------

/// <Fs_mu> under the mixed measure:
///   (xi/(1-xi))^{|mu|} prod_boxes (z+c)(z'+c) * dim mu / |mu|!.
Rational expect_fs_exact(const Partition& mu, const MixedZParams& mp);
Complex expect_fs(const Partition& mu, const MixedZParams& mp);

/// | <Fs_lambda> - det[ <Fs_{(p_i|q_j)}> ] |, zero when the averaged
/// Giambelli identity holds.
Rational giambelli_expectation_check_exact(const Partition& lambda,
                                           const MixedZParams& mp);
double giambelli_expectation_check(const Partition& lambda,
                                   const MixedZParams& mp);

// ---------------------------------------------------------------------------
// Harmonic growth chain and sampling.
// ---------------------------------------------------------------------------

/// Transition probability of the growth chain attached to the z-measures:
///   q(mu -> lambda) = (z+c)(z'+c) (dim lambda / dim mu)
///                     / ((zz'+n)(n+1)),
/// with n = |mu| and c the content of the added box.  Rows sum to 1.
Rational transition_prob_exact(const Partition& mu, const Partition& lambda,
                               const ZParams& zp);
double transition_prob(const Partition& mu, const Partition& lambda,
                       const ZParams& zp);

/// Run the growth chain for n steps from the empty diagram.
Partition grow_chain(int n, const ZParams& zp, std::mt19937_64& rng);

/// Draw |lambda| = n from P(n) = (1-xi)^{zz'} (zz')_n xi^n / n!, then grow.
Partition sample_mixed(const MixedZParams& mp, std::mt19937_64& rng);

/// Deterministic per-sample substream: the i-th sample of a run depends only
/// on (seed, i), not on worker layout.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

}  // namespace giambelli

#endif
