#include "giambelli/ope.hpp"

#include <algorithm>

namespace giambelli {

DiscreteMeasure::DiscreteMeasure(std::vector<Rational> a,
                                 std::vector<Rational> w)
    : atoms(std::move(a)), weights(std::move(w)) {
  if (atoms.size() != weights.size())
    throw std::invalid_argument("measure: atom/weight count mismatch");
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (weights[i] <= 0) throw std::invalid_argument("measure: weight <= 0");
    for (size_t j = i + 1; j < atoms.size(); ++j)
      if (atoms[i] == atoms[j])
        throw std::invalid_argument("measure: repeated atom");
  }
}

Rational DiscreteMeasure::moment(long n) const {
  Rational s(0);
  for (size_t j = 0; j < atoms.size(); ++j) s += weights[j] * ipow(atoms[j], n);
  return s;
}

EnsembleSpec::EnsembleSpec(DiscreteMeasure m, int n)
    : measure(std::move(m)), N(n) {
  if (N < 1 || N > measure.size())
    throw std::invalid_argument("ensemble: need 1 <= N <= #atoms");
}

std::vector<std::vector<int>> subsets(int M, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(N);
  for (int i = 0; i < N; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = N - 1;
    while (i >= 0 && idx[i] == M - N + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < N; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

Rational config_weight(const std::vector<int>& idx, const EnsembleSpec& spec) {
  const auto& m = spec.measure;
  Rational w(1);
  for (int i : idx) w *= m.weights[i];
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      Rational d = m.atoms[idx[a]] - m.atoms[idx[b]];
      w *= d * d;
    }
  return w;
}

int atom_index(const Rational& x, const DiscreteMeasure& m) {
  for (int i = 0; i < m.size(); ++i)
    if (m.atoms[i] == x) return i;
  throw std::invalid_argument("point is not an atom of the measure");
}

}  // namespace

Rational partition_function(const EnsembleSpec& spec) {
  Rational z(0);
  for (const auto& idx : subsets(spec.measure.size(), spec.N))
    z += config_weight(idx, spec);
  if (z == 0) throw std::logic_error("ensemble: zero partition function");
  return z;
}

Rational partition_function_det(const EnsembleSpec& spec) {
  const int n = spec.N;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = spec.measure.moment(i + j);
  return det(a);
}

Rational ensemble_prob(const std::vector<int>& idx, const EnsembleSpec& spec) {
  if (static_cast<int>(idx.size()) != spec.N)
    throw std::invalid_argument("ensemble_prob: wrong configuration size");
  Rational p = config_weight(idx, spec) / partition_function(spec);
  p.canonicalize();
  return p;
}

Rational avg_schur(const Partition& lambda, const EnsembleSpec& spec) {
  const int n = spec.N;
  if (lambda.length() > n) return Rational(0);
  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> den(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      num[i - 1][j - 1] =
          spec.measure.moment(lambda.part(i) + n - i + n - j);
      den[i - 1][j - 1] = spec.measure.moment(2 * n - i - j);
    }
  Rational r = det(num) / det(den);
  r.canonicalize();
  return r;
}

Rational avg_schur_enum(const Partition& lambda, const EnsembleSpec& spec) {
  Rational z = partition_function(spec);
  Rational acc(0);
  for (const auto& idx : subsets(spec.measure.size(), spec.N)) {
    std::vector<Rational> xs;
    for (int i : idx) xs.push_back(spec.measure.atoms[i]);
    acc += config_weight(idx, spec) * schur_jacobi_trudi(lambda, xs);
  }
  Rational r = acc / z;
  r.canonicalize();
  return r;
}

Rational giambelli_check_ope(const Partition& lambda,
                             const EnsembleSpec& spec) {
  Rational lhs = avg_schur(lambda, spec);
  FrobeniusCoords fc = lambda.frobenius();
  const int d = fc.d();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m[i][j] = avg_schur(Partition::hook(fc.p[i], fc.q[j]), spec);
  Rational res = lhs - det(m);
  return res < 0 ? Rational(-res) : res;
}

namespace {

Rational poly_inner(const std::vector<Rational>& p,
                    const std::vector<Rational>& q,
                    const DiscreteMeasure& alpha) {
  Rational s(0);
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = 0; b < q.size(); ++b)
      s += p[a] * q[b] * alpha.moment(static_cast<long>(a + b));
  return s;
}

Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
  Rational v(0);
  for (size_t a = p.size(); a-- > 0;) v = v * x + p[a];
  return v;
}

std::vector<std::vector<Rational>> orthopoly_all(const DiscreteMeasure& alpha,
                                                 int kmax) {
  std::vector<std::vector<Rational>> polys;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<Rational> p(k + 1, Rational(0));
    p[k] = 1;  // monic x^k
    for (int j = 0; j < k; ++j) {
      Rational coef =
          poly_inner(p, polys[j], alpha) / poly_inner(polys[j], polys[j], alpha);
      for (size_t a = 0; a < polys[j].size(); ++a) p[a] -= coef * polys[j][a];
    }
    polys.push_back(std::move(p));
  }
  return polys;
}

}  // namespace

std::vector<Rational> orthopoly(const DiscreteMeasure& alpha, int k) {
  if (k < 0 || k >= alpha.size())
    throw std::invalid_argument("orthopoly: need 0 <= k < #atoms");
  return orthopoly_all(alpha, k)[k];
}

Rational orthopoly_norm2(const DiscreteMeasure& alpha, int k) {
  auto p = orthopoly(alpha, k);
  return poly_inner(p, p, alpha);
}

Rational cd_kernel_raw(const Rational& x, const Rational& y,
                       const EnsembleSpec& spec) {
  atom_index(x, spec.measure);
  atom_index(y, spec.measure);
  auto polys = orthopoly_all(spec.measure, spec.N - 1);
  Rational s(0);
  for (int k = 0; k < spec.N; ++k)
    s += poly_eval(polys[k], x) * poly_eval(polys[k], y) /
         poly_inner(polys[k], polys[k], spec.measure);
  s.canonicalize();
  return s;
}

Rational residue_kernel(const Rational& x, const Rational& y,
                        const EnsembleSpec& spec) {
  atom_index(x, spec.measure);
  int yi = atom_index(y, spec.measure);
  if (x == 0 || y == 0)
    throw std::invalid_argument("residue_kernel: the atom 0 is a pole of E");
  Rational z = partition_function(spec);
  Rational acc(0);
  Rational ratio_pow = ipow(Rational(y / x), spec.N);
  for (const auto& idx : subsets(spec.measure.size(), spec.N)) {
    if (std::find(idx.begin(), idx.end(), yi) == idx.end()) continue;
    Rational term = config_weight(idx, spec) * ratio_pow;
    for (int i : idx) {
      if (i == yi) continue;
      const Rational& xi = spec.measure.atoms[i];
      term *= (x - xi) / (y - xi);
    }
    acc += term;
  }
  Rational r = acc / z;
  r.canonicalize();
  return r;
}

Rational brute_rho(const std::vector<Rational>& pts,
                   const EnsembleSpec& spec) {
  std::vector<int> want;
  for (const auto& p : pts) want.push_back(atom_index(p, spec.measure));
  std::sort(want.begin(), want.end());
  if (std::adjacent_find(want.begin(), want.end()) != want.end())
    throw std::invalid_argument("brute_rho: repeated points");
  Rational z = partition_function(spec);
  Rational acc(0);
  for (const auto& idx : subsets(spec.measure.size(), spec.N)) {
    if (std::includes(idx.begin(), idx.end(), want.begin(), want.end()))
      acc += config_weight(idx, spec);
  }
  Rational r = acc / z;
  r.canonicalize();
  return r;
}

Rational rho_det_cd(const std::vector<Rational>& pts,
                    const EnsembleSpec& spec) {
  const size_t m = pts.size();
  std::vector<std::vector<Rational>> k(m, std::vector<Rational>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      k[i][j] = cd_kernel_raw(pts[i], pts[j], spec);
  Rational d = det(k);
  // sqrt(w(x)w(y)) symmetrization contributes prod w(y) at determinant level
  for (const auto& p : pts)
    d *= spec.measure.weights[atom_index(p, spec.measure)];
  d.canonicalize();
  return d;
}

Rational rho_det_residue(const std::vector<Rational>& pts,
                         const EnsembleSpec& spec) {
  const size_t m = pts.size();
  std::vector<std::vector<Rational>> k(m, std::vector<Rational>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      k[i][j] = residue_kernel(pts[i], pts[j], spec);
  return det(k);
}

Rational determinantal_identity_ope(const std::vector<Rational>& us,
                                    const std::vector<Rational>& vs,
                                    const EnsembleSpec& spec) {
  if (us.size() != vs.size())
    throw std::invalid_argument("determinantal identity: size mismatch");
  const int d = static_cast<int>(us.size());
  const auto& atoms = spec.measure.atoms;
  for (const auto& u : us)
    for (const auto& a : atoms)
      if (u == a) throw std::invalid_argument("u hits an atom");
  for (const auto& v : vs)
    if (v == 0) throw std::invalid_argument("v = 0 is a pole of E");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (us[i] + vs[j] == 0)
        throw std::invalid_argument("u_i + v_j = 0");

  auto he_at = [&](const Rational& u, const Rational& v,
                   const std::vector<int>& idx) {
    // H(u)E(v) at the configuration: prod u(v+x_k) / ((u-x_k) v)
    Rational r(1);
    for (int k : idx) r *= u * (v + atoms[k]) / ((u - atoms[k]) * v);
    return r;
  };

  Rational z = partition_function(spec);
  std::vector<std::vector<Rational>> rhs(d, std::vector<Rational>(d,
                                                                  Rational(0)));
  Rational lhs(0);
  for (const auto& idx : subsets(spec.measure.size(), spec.N)) {
    Rational w = config_weight(idx, spec);
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational he = he_at(us[i], vs[j], idx);
        m[i][j] = he / (us[i] + vs[j]);
        rhs[i][j] += w * he;
      }
    lhs += w * det(m);
  }
  lhs /= z;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rhs[i][j] /= z * (us[i] + vs[j]);
  Rational res = lhs - det(rhs);
  res.canonicalize();
  return res < 0 ? Rational(-res) : res;
}

}  // namespace giambelli
