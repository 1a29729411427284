#include "giambelli/specfun.hpp"

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace giambelli {

namespace {

bool near_nonpositive_int(const Complex& c) {
  if (std::abs(c.imag()) > 1e-12) return false;
  double r = c.real();
  return r < 0.5 && std::abs(r - std::round(r)) < 1e-12;
}

}  // namespace

Complex gauss_2f1_series(Complex a, Complex b, Complex c, Complex x,
                         const PrecisionPolicy& pp) {
  if (near_nonpositive_int(c))
    throw std::domain_error("gauss_2f1: c is a nonpositive integer");
  Complex sum = 1.0;
  Complex term = 1.0;
  int small_streak = 0;
  for (int n = 0; n < pp.max_terms; ++n) {
    term *= (a + Complex(n)) * (b + Complex(n)) /
            ((c + Complex(n)) * Complex(n + 1)) * x;
    sum += term;
    if (std::abs(term) < pp.target * std::max(1.0, std::abs(sum))) {
      if (++small_streak >= 3 && n >= 16) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw std::runtime_error("gauss_2f1: series did not converge");
}

Complex gauss_2f1_xi(Complex a, Complex b, Complex c, double xi,
                     const PrecisionPolicy& pp) {
  if (!(xi > 0.0 && xi < 1.0))
    throw std::domain_error("gauss_2f1_xi: xi outside (0,1)");
  // F(a,b;c;z) = (1-z)^{-a} F(a,c-b;c;z/(z-1)) with z = xi/(xi-1):
  // z/(z-1) = xi and (1-z)^{-a} = (1-xi)^{a}.
  return std::pow(Complex(1.0 - xi), a) *
         gauss_2f1_series(a, c - b, c, Complex(xi), pp);
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z,
                  const PrecisionPolicy& pp) {
  if (std::abs(z) < 0.95) return gauss_2f1_series(a, b, c, z, pp);
  if (z.real() < 0.5) {
    Complex w = z / (z - Complex(1));
    return std::pow(Complex(1) - z, -a) * gauss_2f1_series(a, c - b, c, w, pp);
  }
  throw std::domain_error("gauss_2f1: argument outside supported region");
}

Complex residue_2f1_c(Complex a, Complex b, int n, Complex zeta,
                      const PrecisionPolicy& pp) {
  if (n < 0) throw std::invalid_argument("residue_2f1_c: n < 0");
  Complex pref = std::pow(Complex(-1), n) * ipow(zeta, n + 1) *
                 pochhammer(a, n + 1) * pochhammer(b, n + 1) /
                 (Complex(factorial(n).get_d()) *
                  Complex(factorial(n + 1).get_d()));
  return pref * gauss_2f1(a + Complex(n + 1), b + Complex(n + 1),
                          Complex(n + 2), zeta, pp);
}

Complex f3(Complex a, Complex ap, Complex b, Complex bp, Complex c, Complex x,
           Complex y, const PrecisionPolicy& pp) {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
    throw std::domain_error("f3: arguments outside the unit polydisc");
  if (near_nonpositive_int(c))
    throw std::domain_error("f3: c is a nonpositive integer");
  Complex sum = 0.0;
  // row m: (a)_m (b)_m x^m / m!, inner series in n with (c)_{m+n}.
  Complex rowfac = 1.0;
  Complex poch_c_m = 1.0;  // (c)_m
  int small_streak = 0;
  for (int m = 0; m < pp.max_terms; ++m) {
    Complex t = rowfac / poch_c_m;  // n = 0 term
    Complex rowsum = t;
    int inner_streak = 0;
    for (int n = 0; n < pp.max_terms; ++n) {
      t *= (ap + Complex(n)) * (bp + Complex(n)) /
           ((c + Complex(m + n)) * Complex(n + 1)) * y;
      rowsum += t;
      if (std::abs(t) < pp.target * std::max(1.0, std::abs(rowsum))) {
        if (++inner_streak >= 3) break;
      } else {
        inner_streak = 0;
      }
      if (n == pp.max_terms - 1)
        throw std::runtime_error("f3: inner series did not converge");
    }
    sum += rowsum;
    if (std::abs(rowsum) < pp.target * std::max(1.0, std::abs(sum))) {
      if (++small_streak >= 3 && m >= 8) return sum;
    } else {
      small_streak = 0;
    }
    rowfac *= (a + Complex(m)) * (b + Complex(m)) / Complex(m + 1) * x;
    poch_c_m *= (c + Complex(m));
  }
  throw std::runtime_error("f3: outer series did not converge");
}

namespace {

// Laplace integral, a > 0, Re x > 0:
//   U(a,b,x) = 1/Gamma(a) int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt.
template <class X>
X tricomi_u_integral(double a, double b, const X& x,
                     const PrecisionPolicy& pp) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double inv_gamma = 1.0 / std::tgamma(a);
  auto f = [&](double t) -> X {
    return std::exp(-x * t) * std::pow(t, a - 1.0) *
           std::pow(1.0 + t, b - a - 1.0);
  };
  double err;
  X val = integrator.integrate(f, pp.quad_tol, &err);
  return inv_gamma * val;
}

template <class X>
X tricomi_u_impl(double a, double b, const X& x, const PrecisionPolicy& pp) {
  if (a <= -1.0)
    throw std::domain_error("tricomi_u: a <= -1 not supported");
  if (std::abs(a) < 1e-14) return X(1);
  if (a > 0.0) return tricomi_u_integral(a, b, x, pp);
  // a in (-1,0): one step of the recurrence
  // U(a,b,x) = (2a+2-b+x) U(a+1,b,x) - (a+1)(a+2-b) U(a+2,b,x).
  X u1 = tricomi_u_integral(a + 1.0, b, x, pp);
  X u2 = tricomi_u_integral(a + 2.0, b, x, pp);
  return (x + (2.0 * a + 2.0 - b)) * u1 - (a + 1.0) * (a + 2.0 - b) * u2;
}

}  // namespace

double tricomi_u(double a, double b, double x, const PrecisionPolicy& pp) {
  if (!(x > 0)) throw std::domain_error("tricomi_u: x <= 0");
  return tricomi_u_impl(a, b, x, pp);
}

Complex tricomi_u(double a, double b, Complex x, const PrecisionPolicy& pp) {
  if (!(x.real() > 0)) throw std::domain_error("tricomi_u: Re x <= 0");
  return tricomi_u_impl(a, b, x, pp);
}

double whittaker_w(double kappa, double mu, double x,
                   const PrecisionPolicy& pp) {
  if (!(x > 0)) throw std::domain_error("whittaker_w: x <= 0");
  return std::exp(-x / 2) * std::pow(x, mu + 0.5) *
         tricomi_u(mu - kappa + 0.5, 1.0 + 2.0 * mu, x, pp);
}

Complex whittaker_w(double kappa, double mu, Complex x,
                    const PrecisionPolicy& pp) {
  if (!(x.real() > 0)) throw std::domain_error("whittaker_w: Re x <= 0");
  return std::exp(-x / 2.0) * std::pow(x, mu + 0.5) *
         tricomi_u(mu - kappa + 0.5, 1.0 + 2.0 * mu, x, pp);
}

}  // namespace giambelli
