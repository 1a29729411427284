#ifndef GIAMBELLI_OPE_HPP
#define GIAMBELLI_OPE_HPP

#include <vector>

#include "giambelli/partition.hpp"
#include "giambelli/symfunc.hpp"

namespace giambelli {

/// Finitely supported atomic measure with positive rational weights.
struct DiscreteMeasure {
  std::vector<Rational> atoms;
  std::vector<Rational> weights;

  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<Rational> a, std::vector<Rational> w);

  int size() const { return static_cast<int>(atoms.size()); }

  /// n-th moment sum w_j t_j^n, exact.
  Rational moment(long n) const;
};

/// N-point orthogonal polynomial ensemble over the measure:
/// P(X) proportional to V(X)^2 prod_{x in X} w(x) on N-subsets of the atoms.
struct EnsembleSpec {
  DiscreteMeasure measure;
  int N = 1;

  EnsembleSpec() = default;
  EnsembleSpec(DiscreteMeasure m, int n);
};

/// All N-subsets of {0,...,M-1} in lexicographic order (index vectors).
std::vector<std::vector<int>> subsets(int M, int N);

/// Normalization constant Z = sum over N-subsets of V^2 prod w.
Rational partition_function(const EnsembleSpec& spec);

/// Z through the Andreief identity, det[A_{i+j}]_{0<=i,j<N}; equals
/// partition_function (cross-check of the enumeration).
Rational partition_function_det(const EnsembleSpec& spec);

/// Probability of one configuration (indices into the atom list).
Rational ensemble_prob(const std::vector<int>& idx, const EnsembleSpec& spec);

/// <s_lambda> through the moment determinant
///   det[A_{lambda_i+N-i+N-j}] / det[A_{2N-i-j}]  (i,j = 1..N).
Rational avg_schur(const Partition& lambda, const EnsembleSpec& spec);

/// <s_lambda> by direct enumeration over configurations (oracle).
Rational avg_schur_enum(const Partition& lambda, const EnsembleSpec& spec);

/// | <s_lambda> - det[ <s_{(p_i|q_j)}> ] |, exact.
Rational giambelli_check_ope(const Partition& lambda,
                             const EnsembleSpec& spec);

/// Monic orthogonal polynomial pi_k (coefficients, ascending degree).
std::vector<Rational> orthopoly(const DiscreteMeasure& alpha, int k);

/// Squared norm ||pi_k||^2 = int pi_k^2 d alpha.
Rational orthopoly_norm2(const DiscreteMeasure& alpha, int k);

/// Christoffel-Darboux kernel without the sqrt(w(x)w(y)) symmetrization:
///   Kraw(x,y) = sum_{k<N} pi_k(x) pi_k(y) / ||pi_k||^2.
/// Correlation determinants are taken with the weight factored per point:
///   det over Y of [sqrt(w(x)w(y)) Kraw] = prod_{y in Y} w(y) * det[Kraw],
/// keeping everything rational.
Rational cd_kernel_raw(const Rational& x, const Rational& y,
                       const EnsembleSpec& spec);

/// Residue kernel of the two-point-average factorization:
///   K(x,y) = Res_{u=y} <E(-x)H(u)> / (x-y)
/// with <E(-x)H(u)> = sum_X P(X) (u/x)^N prod_i (x-x_i)/(u-x_i).
/// The residue evaluates exactly to
///   sum_{X containing y} P(X) (y/x)^N prod_{x_i != y} (x-x_i)/(y-x_i),
/// and the diagonal limit x -> y gives rho_1(y) directly.
Rational residue_kernel(const Rational& x, const Rational& y,
                        const EnsembleSpec& spec);

/// rho_m by brute-force enumeration: probability that the configuration
/// contains all the given atoms.
Rational brute_rho(const std::vector<Rational>& pts, const EnsembleSpec& spec);

/// rho_m determinants from the CD kernel (weight-factored) and from the
/// residue kernel.
Rational rho_det_cd(const std::vector<Rational>& pts,
                    const EnsembleSpec& spec);
Rational rho_det_residue(const std::vector<Rational>& pts,
                         const EnsembleSpec& spec);

/// Exact determinantal identity of degree d:
/// | <det[H(u_i)E(v_j)/(u_i+v_j)]> - det[<H(u_i)E(v_j)>/(u_i+v_j)] |
/// evaluated over the finite ensemble (both sides exact rationals).
Rational determinantal_identity_ope(const std::vector<Rational>& us,
                                    const std::vector<Rational>& vs,
                                    const EnsembleSpec& spec);

}  // namespace giambelli

#endif
