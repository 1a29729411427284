#include "giambelli/symfunc.hpp"

#include <numeric>

namespace giambelli {

Rational power_sum_at_partition(int k, const Partition& lambda) {
  if (k < 1) throw std::invalid_argument("power_sum_at_partition: k < 1");
  FrobeniusCoords fc = lambda.frobenius();
  Rational acc(0);
  int sign = (k % 2 == 1) ? 1 : -1;
  for (int i = 0; i < fc.d(); ++i) {
    Rational a(2 * fc.p[i] + 1, 2);
    Rational b(2 * fc.q[i] + 1, 2);
    acc += ipow(a, k) + Rational(sign) * ipow(b, k);
  }
  return acc;
}

Rational frobenius_schur_at(const Partition& mu, const Partition& lambda) {
  const long n = lambda.size();
  const long m = mu.size();
  if (m > n) return Rational(0);
  Integer paths = dim_skew(mu, lambda);
  if (paths == 0) return Rational(0);
  Integer nf = falling(Integer(n), m);
  Rational r(paths * nf, lambda.dim_hook());
  r.canonicalize();
  return r;
}

OmegaPoint::OmegaPoint(std::vector<double> a, std::vector<double> b, double d)
    : alpha(std::move(a)), beta(std::move(b)), delta(d) {
  auto check = [](const std::vector<double>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw std::invalid_argument(std::string(name) + " < 0");
      if (i + 1 < v.size() && v[i] < v[i + 1])
        throw std::invalid_argument(std::string(name) + " not nonincreasing");
    }
  };
  check(alpha, "alpha");
  check(beta, "beta");
  if (gamma() < -1e-12)
    throw std::invalid_argument("sum alpha + sum beta exceeds delta");
}

double OmegaPoint::gamma() const {
  double s = delta;
  for (double a : alpha) s -= a;
  for (double b : beta) s -= b;
  return s;
}

double power_sum_at_omega(int k, const OmegaPoint& omega) {
  if (k < 1) throw std::invalid_argument("power_sum_at_omega: k < 1");
  if (k == 1) return omega.delta;
  double s = 0;
  for (double a : omega.alpha) s += std::pow(a, k);
  double t = 0;
  for (double b : omega.beta) t += std::pow(b, k);
  return s + ((k % 2 == 1) ? t : -t);
}

Complex H_at_omega(const Complex& u, const OmegaPoint& omega) {
  Complex r = std::exp(omega.gamma() / u);
  for (double b : omega.beta) r *= Complex(1) + b / u;
  for (double a : omega.alpha) {
    Complex den = Complex(1) - a / u;
    if (std::abs(den) == 0.0) throw std::domain_error("H_at_omega: pole hit");
    r /= den;
  }
  return r;
}

Complex E_at_omega(const Complex& v, const OmegaPoint& omega) {
  Complex r = std::exp(omega.gamma() / v);
  for (double a : omega.alpha) r *= Complex(1) + a / v;
  for (double b : omega.beta) {
    Complex den = Complex(1) - b / v;
    if (std::abs(den) == 0.0) throw std::domain_error("E_at_omega: pole hit");
    r /= den;
  }
  return r;
}

}  // namespace giambelli
