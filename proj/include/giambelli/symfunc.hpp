#ifndef GIAMBELLI_SYMFUNC_HPP
#define GIAMBELLI_SYMFUNC_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "giambelli/numeric.hpp"
#include "giambelli/partition.hpp"

namespace giambelli {

template <class S>
S half_as(int twice) {
  return S(twice) / S(2);
}

// ---------------------------------------------------------------------------
// Parameter sequences a = (a_i), i in Z, with shift (tau^r a)_i = a_{i+r}
// and dual (a^)_i = -a_{-i+1}.
// ---------------------------------------------------------------------------
template <class S>
struct ParameterSequence {
  std::function<S(long)> f;
  long offset = 0;

  S operator()(long i) const { return f(i + offset); }

  ParameterSequence shifted(long r) const { return {f, offset + r}; }

  ParameterSequence dual() const {
    auto self = *this;
    return {[self](long i) -> S { return -self(-i + 1); }, 0};
  }

  static ParameterSequence zero() {
    return {[](long) { return S(0); }, 0};
  }

  /// a_i = i - 1/2, the specialization giving the Frobenius-Schur functions.
  static ParameterSequence frobenius_schur() {
    return {[](long i) -> S { return S(2 * i - 1) / S(2); }, 0};
  }
};

// ---------------------------------------------------------------------------
// Complete homogeneous values.
// ---------------------------------------------------------------------------

/// h_0..h_kmax evaluated at the points xs (series coefficients of
/// prod_i 1/(1 - x_i t)).
template <class S>
std::vector<S> h_values_at_points(const std::vector<S>& xs, int kmax) {
  std::vector<S> h(kmax + 1, S(0));
  h[0] = S(1);
  for (const S& x : xs)
    for (int k = 1; k <= kmax; ++k) h[k] = h[k] + x * h[k - 1];
  return h;
}

/// Newton's identities: k h_k = sum_{i=1..k} p_i h_{k-i}.  ps[1..kmax] holds
/// the power sum images; ps[0] is ignored.
template <class S>
std::vector<S> h_from_power_sums(const std::vector<S>& ps, int kmax) {
  std::vector<S> h(kmax + 1, S(0));
  h[0] = S(1);
  for (int k = 1; k <= kmax; ++k) {
    S acc = S(0);
    for (int i = 1; i <= k; ++i) acc = acc + ps[i] * h[k - i];
    h[k] = acc / S(k);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Schur function evaluation.
// ---------------------------------------------------------------------------

/// s_lambda(x_1..x_N) by the Jacobi-Trudi determinant det[h_{lambda_i-i+j}].
/// Returns 0 when l(lambda) > N.
template <class S>
S schur_jacobi_trudi(const Partition& lambda, const std::vector<S>& xs) {
  const int l = lambda.length();
  if (l == 0) return S(1);
  if (l > static_cast<int>(xs.size())) return S(0);
  const int kmax = lambda.part(1) + l;
  std::vector<S> h = h_values_at_points(xs, kmax);
  std::vector<std::vector<S>> m(l, std::vector<S>(l, S(0)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int deg = lambda.part(i) - i + j;
      m[i - 1][j - 1] = deg < 0 ? S(0) : h[deg];
    }
  return det(m);
}

/// s_lambda by the bialternant ratio det(x_i^{lambda_j+N-j}) / V(x).
/// Requires pairwise distinct points.
template <class S>
S schur_bialternant(const Partition& lambda, const std::vector<S>& xs) {
  const int n = static_cast<int>(xs.size());
  if (lambda.length() > n) return S(0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (xs[i] == xs[j])
        throw std::invalid_argument("schur_bialternant: repeated points");
  std::vector<std::vector<S>> num(n, std::vector<S>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      num[i][j] = ipow(xs[i], lambda.part(j + 1) + n - (j + 1));
  S vand = S(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vand = vand * (xs[i] - xs[j]);
  return det(num) / vand;
}

template <class S>
S schur_at_points(const Partition& lambda, const std::vector<S>& xs) {
  return schur_jacobi_trudi(lambda, xs);
}

// ---------------------------------------------------------------------------
// Multiparameter Schur functions.
// ---------------------------------------------------------------------------

/// Image of h_{k;a} given the images hvals[0..k] of h_0..h_k under an algebra
/// morphism.  Determined by matching coefficients in
///   1 + sum_k h_{k,a} / ((u-a_1)...(u-a_k)) = 1 + sum_k h_k / u^k,
/// which yields the triangular relations
///   h_m = sum_{k=1..m} h_{k,a} * h_{m-k}(a_1..a_k).
template <class S>
S multiparam_h(int k, const ParameterSequence<S>& a, const std::vector<S>& hvals) {
  if (k < 0) return S(0);
  if (k == 0) return S(1);
  if (static_cast<int>(hvals.size()) <= k)
    throw std::invalid_argument("multiparam_h: missing h values");
  std::vector<S> ha(k + 1, S(0));
  ha[0] = S(1);
  for (int m = 1; m <= k; ++m) {
    // h_{m-k'}(a_1..a_k') for each k' < m.
    S acc = hvals[m];
    for (int kp = 1; kp < m; ++kp) {
      std::vector<S> pars;
      for (long i = 1; i <= kp; ++i) pars.push_back(a(i));
      std::vector<S> hp = h_values_at_points(pars, m - kp);
      acc = acc - ha[kp] * hp[m - kp];
    }
    ha[m] = acc;
  }
  return ha[k];
}

/// s_{mu;a} = det[ h_{mu_i - i + j ; tau^{1-j} a} ].
template <class S>
S multiparam_schur(const Partition& mu, const ParameterSequence<S>& a,
                   const std::vector<S>& hvals) {
  const int l = mu.length();
  if (l == 0) return S(1);
  std::vector<std::vector<S>> m(l, std::vector<S>(l, S(0)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int deg = mu.part(i) - i + j;
      m[i - 1][j - 1] =
          deg < 0 ? S(0) : multiparam_h(deg, a.shifted(1 - j), hvals);
    }
  return det(m);
}

// ---------------------------------------------------------------------------
// Polynomial functions on partitions (modified Frobenius coordinates).
// ---------------------------------------------------------------------------

/// p_k(lambda) = sum a_i^k + (-1)^{k-1} sum b_i^k, exact.
Rational power_sum_at_partition(int k, const Partition& lambda);

/// Fs_mu(lambda) = dim(mu,lambda) n^{down m} / dim lambda, exact.
Rational frobenius_schur_at(const Partition& mu, const Partition& lambda);

/// Same value through the multiparameter determinant at a_i = i - 1/2 with
/// h images induced by the power sums p_k(lambda); kept as a cross-check and
/// used by the floating-point oracle path.
template <class S>
S frobenius_schur_via_det(const Partition& mu, const Partition& lambda) {
  const int m = static_cast<int>(mu.size());
  const int kmax = mu.part(1) + mu.length();
  std::vector<S> ps(kmax + 1, S(0));
  FrobeniusCoords fc = lambda.frobenius();
  for (int k = 1; k <= kmax; ++k) {
    Rational v = power_sum_at_partition(k, lambda);
    if constexpr (std::is_same_v<S, Rational>)
      ps[k] = v;
    else
      ps[k] = S(v.get_d());
  }
  (void)m;
  (void)fc;
  std::vector<S> h = h_from_power_sums(ps, kmax);
  return multiparam_schur(mu, ParameterSequence<S>::frobenius_schur(), h);
}

/// H(u)(lambda) = prod (u + b_i)/(u - a_i).
template <class S>
S H_at_partition(const S& u, const Partition& lambda) {
  FrobeniusCoords fc = lambda.frobenius();
  S r = S(1);
  for (int i = 0; i < fc.d(); ++i) {
    S a = half_as<S>(2 * fc.p[i] + 1);
    S b = half_as<S>(2 * fc.q[i] + 1);
    if (u == a) throw std::domain_error("H_at_partition: pole hit");
    r = r * (u + b) / (u - a);
  }
  return r;
}

/// E(v)(lambda) = prod (v + a_i)/(v - b_i).
template <class S>
S E_at_partition(const S& v, const Partition& lambda) {
  FrobeniusCoords fc = lambda.frobenius();
  S r = S(1);
  for (int i = 0; i < fc.d(); ++i) {
    S a = half_as<S>(2 * fc.p[i] + 1);
    S b = half_as<S>(2 * fc.q[i] + 1);
    if (v == b) throw std::domain_error("E_at_partition: pole hit");
    r = r * (v + a) / (v - b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Points of the cone over the Thoma simplex.
// ---------------------------------------------------------------------------

/// omega = (alpha, beta, delta) with finitely many nonzero alpha, beta and
/// sum alpha + sum beta <= delta.
struct OmegaPoint {
  std::vector<double> alpha;
  std::vector<double> beta;
  double delta = 0.0;

  OmegaPoint() = default;
  OmegaPoint(std::vector<double> a, std::vector<double> b, double d);

  double gamma() const;
};

double power_sum_at_omega(int k, const OmegaPoint& omega);

Complex H_at_omega(const Complex& u, const OmegaPoint& omega);
Complex E_at_omega(const Complex& v, const OmegaPoint& omega);

}  // namespace giambelli

#endif
