#ifndef GIAMBELLI_KERNELS_HPP
#define GIAMBELLI_KERNELS_HPP

#include <vector>

#include "giambelli/specfun.hpp"
#include "giambelli/zmeasure.hpp"

namespace giambelli {

struct MMatrix {
  Complex m11, m12, m21, m22;
};

// ---------------------------------------------------------------------------
// Discrete hypergeometric kernel on Z' = Z + 1/2.
// Lattice points are passed as twice their value (odd integers).
// ---------------------------------------------------------------------------

/// <H(u)E(v)> under the mixed measure:
///   F(z,z';-u+1/2;zeta) F(-z,-z';-v+1/2;zeta)
///   + zz'xi / ((1-xi)^2 (u-1/2)(v-1/2))
///     * F(z+1,z'+1;-u+3/2;zeta) F(-z+1,-z'+1;-v+3/2;zeta),
/// zeta = xi/(xi-1).
Complex two_point_avg_discrete(Complex u, Complex v, const MixedZParams& mp,
                               const PrecisionPolicy& pp = {});

/// <E(-v)H(u)> obtained from the same formula (v -> -v).
Complex two_point_EH(Complex u, Complex v, const MixedZParams& mp,
                     const PrecisionPolicy& pp = {});

/// The 2x2 matrix
///   m11 = F(-z,-z';u+1/2;zeta)
///   m12 =  s F(1+z,1+z';-u+3/2;zeta) / (-u+1/2)
///   m21 = -s F(1-z,1-z';u+3/2;zeta) / (u+1/2)
///   m22 = F(z,z';-u+1/2;zeta)
/// with s = sqrt(zz'xi)/(1-xi); satisfies
/// <E(-v)H(u)> = m11(v)m22(u) - m21(v)m12(u).
MMatrix m_matrix_discrete(Complex u, const MixedZParams& mp,
                          const PrecisionPolicy& pp = {});

/// Residues of the matrix entries at lattice points: at x > 0 only m12, m22
/// have poles, at x < 0 only m11, m21.  Each function rejects points on the
/// wrong half-lattice.
Complex res_m11(int x2, const MixedZParams& mp, const PrecisionPolicy& pp = {});
Complex res_m12(int x2, const MixedZParams& mp, const PrecisionPolicy& pp = {});
Complex res_m21(int x2, const MixedZParams& mp, const PrecisionPolicy& pp = {});
Complex res_m22(int x2, const MixedZParams& mp, const PrecisionPolicy& pp = {});

/// The positive weight h(x) on Z'.
double h_weight(int x2, const MixedZParams& mp);

/// Discrete hypergeometric kernel K(x,y), block form with h-conjugation;
/// diagonal by the L'Hospital limit (Richardson-extrapolated symmetric
/// difference).
double kernel_discrete(int x2, int y2, const MixedZParams& mp,
                       const PrecisionPolicy& pp = {});

/// The same kernel in its residue form (gauge-equivalent: correlation
/// determinants coincide with kernel_discrete).
double kernel_via_residues(int x2, int y2, const MixedZParams& mp,
                           const PrecisionPolicy& pp = {});

/// rho_m(x_1..x_m) = det[ kernel(x_i, x_j) ].
double rho_m_det(const std::vector<int>& points2, const MixedZParams& mp,
                 bool residue_form = false, const PrecisionPolicy& pp = {});

/// Residual of the discrete Riemann-Hilbert jump condition at x:
/// x > 0: res m12(x) + h^2(x) m11(x) and res m22(x) + h^2(x) m21(x);
/// x < 0: res m11(x) + h^2(x) m12(x) and res m21(x) + h^2(x) m22(x).
/// Returns the max absolute mismatch.
double jump_check(int x2, const MixedZParams& mp,
                  const PrecisionPolicy& pp = {});

// ---------------------------------------------------------------------------
// Continuous (Whittaker) kernel on R* for the spectral measures.
// Parameters must be real with 0 < |z|, |z'| < 1 (same sign component).
// ---------------------------------------------------------------------------

/// <E(v)H(u)> under P_{z,z'} through the two-variable series (Lemma-level
/// formula):
///   F3(z,-z,z',-z';zz';1/u,1/v)
///   + F3(z+1,-z+1,z'+1,-z'+1;zz'+2;1/u,1/v) / (uv(zz'+1)).
Complex two_point_avg_omega(Complex u, Complex v, const ZParams& zp,
                            const PrecisionPolicy& pp = {});

/// <H(u)E(v)> under the gamma-mixed measure, as a product of Whittaker
/// functions at -u, -v (requires Re u < 0, Re v < 0 so the Whittaker
/// integrals converge).
Complex two_point_avg_tilde(Complex u, Complex v, const ZParams& zp,
                            const PrecisionPolicy& pp = {});

/// Continuous h(x) on R*.
double h_whittaker(double x, const ZParams& zp);

/// Whittaker kernel K(x,y) on R*, block form; diagonal by the L'Hospital
/// limit.
double kernel_whittaker(double x, double y, const ZParams& zp,
                        const PrecisionPolicy& pp = {});

}  // namespace giambelli

#endif
