#ifndef GIAMBELLI_SPECFUN_HPP
#define GIAMBELLI_SPECFUN_HPP

#include "giambelli/numeric.hpp"

namespace giambelli {

struct PrecisionPolicy {
  double target = 1e-13;
  int max_terms = 4000;
  double quad_tol = 1e-13;
};

/// Gauss hypergeometric series F(a,b;c;x), |x| < 1.
Complex gauss_2f1_series(Complex a, Complex b, Complex c, Complex x,
                         const PrecisionPolicy& pp = {});

/// F(a,b;c;xi/(xi-1)) for xi in (0,1), computed through the Pfaff
/// transformation F(a,b;c;z) = (1-z)^{-a} F(a,c-b;c;z/(z-1)), so that the
/// working series has the well-behaved argument xi.
Complex gauss_2f1_xi(Complex a, Complex b, Complex c, double xi,
                     const PrecisionPolicy& pp = {});

/// General evaluation for |z| < 1 (direct series) or Re z < 1/2 (Pfaff to the
/// reflected argument z/(z-1)).
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z,
                  const PrecisionPolicy& pp = {});

/// Residue of c -> F(a,b;c;zeta) at c = -n:
///   (-1)^n zeta^{n+1} (a)_{n+1}(b)_{n+1} / (n!(n+1)!)
///     * F(a+n+1, b+n+1; n+2; zeta).
Complex residue_2f1_c(Complex a, Complex b, int n, Complex zeta,
                      const PrecisionPolicy& pp = {});

/// Two-variable hypergeometric series
///   F3(a,a',b,b';c;x,y) = sum (a)_m (a')_n (b)_m (b')_n
///                              / ((c)_{m+n} m! n!) x^m y^n,
/// convergent for |x| < 1, |y| < 1.
Complex f3(Complex a, Complex ap, Complex b, Complex bp, Complex c, Complex x,
           Complex y, const PrecisionPolicy& pp = {});

/// Tricomi function U(a,b,x) for real a > -1, real b, Re x > 0, via the
/// Laplace integral for a > 0 and one step of the a-recurrence for
/// a in (-1,0); U(0,b,x) = 1.
double tricomi_u(double a, double b, double x, const PrecisionPolicy& pp = {});
Complex tricomi_u(double a, double b, Complex x, const PrecisionPolicy& pp = {});

/// Whittaker function W_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2}
///   * U(mu-kappa+1/2, 1+2mu, x), for x > 0 (or complex x with Re x > 0,
/// principal branch of the power) and mu-kappa+1/2 > -1.
double whittaker_w(double kappa, double mu, double x,
                   const PrecisionPolicy& pp = {});
Complex whittaker_w(double kappa, double mu, Complex x,
                    const PrecisionPolicy& pp = {});

}  // namespace giambelli

#endif
