#include "giambelli/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace giambelli {

namespace {

double measure_term(const MixedZParams& mp, long n) {
  // (1-xi)^{zz'} (zz')_n xi^n / n!
  double zz = mp.base.zzp();
  double t = std::exp(zz * std::log1p(-mp.xi));
  for (long k = 0; k < n; ++k) t *= (zz + k) * mp.xi / (k + 1);
  return t;
}

}  // namespace

double tail_bound_env(const MixedZParams& mp,
                      const std::function<double(long)>& g, int N) {
  const double zz = mp.base.zzp();
  const int window = 400;
  double t = measure_term(mp, N + 1) * g(N + 1);
  double sum = t;
  double prev_g = g(N + 1);
  double max_ratio = 0.0;
  for (long n = N + 1; n < N + 1 + window; ++n) {
    double gn1 = g(n + 1);
    double ratio = (gn1 / prev_g) * (zz + n) * mp.xi / (n + 1);
    max_ratio = std::max(max_ratio, ratio);
    t *= ratio;
    sum += t;
    prev_g = gn1;
  }
  if (!(max_ratio < 1.0))
    throw std::runtime_error("tail_bound: term ratio not yet below 1");
  // beyond the window the ratio keeps shrinking toward g-ratio * xi < 1
  return sum + t * max_ratio / (1.0 - max_ratio);
}

double tail_bound(const MixedZParams& mp, int growth_power, int N) {
  return tail_bound_env(
      mp, [growth_power](long n) { return std::pow(double(n), growth_power); },
      N);
}

double he_envelope(const Complex& u, long n) {
  if (n == 0) return 1.0;
  // distance from u to the nearest half-integer
  double re = u.real();
  double nearest = std::round(re - 0.5) + 0.5;
  double dmin = std::hypot(re - nearest, u.imag());
  if (dmin <= 0) throw std::domain_error("he_envelope: u on the lattice");
  double au = std::abs(u);
  // max diagonal length with n boxes: d(d+1)/2 <= n
  int dmax = static_cast<int>((std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0);
  double best = 1.0;
  for (int d = 1; d <= dmax; ++d) {
    // numerator prod (|u|+b_i) <= (|u|+n/d)^d since sum b_i <= n (AM-GM);
    // denominator >= dmin * (d-1)!/2^{d-1} from the unit spacing of the a_i
    double lg = d * std::log(au + double(n) / d) - std::log(dmin) +
                (d - 1) * std::log(2.0) - std::lgamma(double(d));
    best = std::max(best, std::exp(lg));
  }
  return best;
}

TruncationReport brute_expect(
    const std::function<Complex(const Partition&)>& f, const MixedZParams& mp,
    double tol, const std::function<double(long)>& g, int hard_cap) {
  TruncationReport rep;
  Complex acc = 0.0;
  for (int n = 0; n <= hard_cap; ++n) {
    double mix = measure_term(mp, n);
    for (const Partition& lam : enumerate_partitions(n))
      acc += f(lam) * (weight_n(lam, mp.base) * mix);
    double tb;
    try {
      tb = tail_bound_env(mp, g, n);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (tb < tol) {
      rep.value = acc;
      rep.tail = tb;
      rep.n_max = n;
      rep.converged = true;
      return rep;
    }
  }
  rep.value = acc;
  try {
    rep.tail = tail_bound_env(mp, g, hard_cap);
  } catch (const std::runtime_error&) {
    rep.tail = std::numeric_limits<double>::infinity();
  }
  rep.n_max = hard_cap;
  return rep;
}

TruncationReport brute_corr(const std::vector<int>& points2,
                            const MixedZParams& mp, double tol) {
  for (size_t i = 0; i < points2.size(); ++i)
    for (size_t j = i + 1; j < points2.size(); ++j)
      if (points2[i] == points2[j])
        throw std::invalid_argument("brute_corr: repeated points");
  auto contains_all = [&](const Partition& lam) -> Complex {
    std::vector<int> cfg = lam.lattice_config();
    for (int p : points2)
      if (std::find(cfg.begin(), cfg.end(), p) == cfg.end()) return 0.0;
    return 1.0;
  };
  return brute_expect(contains_all, mp, tol, [](long) { return 1.0; });
}

double determinantal_identity_check(const std::vector<Complex>& us,
                                    const std::vector<Complex>& vs,
                                    const MixedZParams& mp, double tol,
                                    int hard_cap) {
  if (us.size() != vs.size())
    throw std::invalid_argument("determinantal identity: size mismatch");
  const int d = static_cast<int>(us.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (std::abs(us[i] + vs[j]) < 1e-12)
        throw std::invalid_argument("u_i + v_j = 0");

  // envelope for a single H(u_i)E(v_j) entry and for the full determinant
  auto entry_env = [&](int i, int j, long n) {
    return he_envelope(us[i], n) * he_envelope(vs[j], n) /
           std::abs(us[i] + vs[j]);
  };
  auto det_env = [&](long n) {
    double prod = 1.0;
    for (int i = 0; i < d; ++i) {
      double row = 0.0;
      for (int j = 0; j < d; ++j) row = std::max(row, entry_env(i, j, n));
      prod *= row;
    }
    return prod * factorial(d).get_d();
  };

  auto lhs_f = [&](const Partition& lam) {
    std::vector<std::vector<Complex>> m(d, std::vector<Complex>(d));
    std::vector<Complex> hs(d), es(d);
    for (int i = 0; i < d; ++i) hs[i] = H_at_partition(us[i], lam);
    for (int j = 0; j < d; ++j) es[j] = E_at_partition(vs[j], lam);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = hs[i] * es[j] / (us[i] + vs[j]);
    return det(m);
  };
  TruncationReport lhs = brute_expect(lhs_f, mp, tol, det_env, hard_cap);

  std::vector<std::vector<Complex>> rhs(d, std::vector<Complex>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto f = [&](const Partition& lam) {
        return H_at_partition(us[i], lam) * E_at_partition(vs[j], lam);
      };
      auto env = [&](long n) {
        return he_envelope(us[i], n) * he_envelope(vs[j], n);
      };
      rhs[i][j] =
          brute_expect(f, mp, tol, env, hard_cap).value / (us[i] + vs[j]);
    }
  return std::abs(lhs.value - det(rhs));
}

double he_bound(const Complex& u, double delta, double eps) {
  double arg = std::abs(std::arg(u));
  if (!(arg > eps && arg < M_PI - eps))
    throw std::domain_error("he_bound: arg u outside (eps, pi - eps)");
  double c = 3.0 + 2.0 * std::log(2.0 / std::sin(eps));
  return std::exp(c * delta / std::abs(u));
}

std::pair<Complex, double> mc_expect_omega(
    const std::function<Complex(const OmegaPoint&)>& f, const ZParams& zp,
    int n, int samples, std::uint64_t seed, bool gamma_mix) {
  if (samples < 2) throw std::invalid_argument("mc_expect_omega: samples < 2");
  Complex sum = 0.0;
  double sumsq = 0.0;
  std::vector<Complex> vals(samples);
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng = substream(seed, static_cast<std::uint64_t>(s));
    Partition lam = grow_chain(n, zp, rng);
    FrobeniusCoords fc = lam.frobenius();
    double scale = 1.0;
    if (gamma_mix) {
      std::gamma_distribution<double> gamma(zp.zzp(), 1.0);
      scale = gamma(rng);
    }
    std::vector<double> alpha, beta;
    for (int i = 0; i < fc.d(); ++i) {
      alpha.push_back(scale * (fc.p[i] + 0.5) / n);
      beta.push_back(scale * (fc.q[i] + 0.5) / n);
    }
    OmegaPoint omega(std::move(alpha), std::move(beta), scale);
    vals[s] = f(omega);
    sum += vals[s];
  }
  Complex mean = sum / double(samples);
  for (const Complex& v : vals) sumsq += std::norm(v - mean);
  double se = std::sqrt(sumsq / (double(samples) * (samples - 1)));
  return {mean, se};
}

}  // namespace giambelli
