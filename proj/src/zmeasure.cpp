#include "giambelli/zmeasure.hpp"

#include <algorithm>
#include <cmath>

namespace giambelli {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// floor of a rational
Integer rfloor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

void check_complementary(const Rational& z, const Rational& zp) {
  if (is_integer(z) || is_integer(zp))
    throw std::invalid_argument("inadmissible parameters: integer z or z'");
  if (rfloor(z) != rfloor(zp))
    throw std::invalid_argument(
        "inadmissible parameters: z, z' not in a common interval (m, m+1)");
}

}  // namespace

Rational ZParams::zzp_exact() const {
  if (!exact) throw std::logic_error("zzp_exact: parameters not rational");
  return zr * zpr;
}

ZParams ZParams::make(const Complex& z, const Complex& zp) {
  ZParams p;
  if (std::abs(z.imag()) > 1e-12 || std::abs(zp.imag()) > 1e-12) {
    if (std::abs(zp - std::conj(z)) > 1e-9)
      throw std::invalid_argument(
          "inadmissible parameters: nonreal z requires z' = conj(z)");
    p.principal = true;
    p.z = z;
    p.zp = std::conj(z);
    return p;
  }
  // Real doubles: route through the rational check with exact decimals not
  // guaranteed; approximate by long-double floor comparison.
  double zr = z.real(), zpr = zp.real();
  if (zr == std::floor(zr) || zpr == std::floor(zpr) ||
      std::floor(zr) != std::floor(zpr))
    throw std::invalid_argument(
        "inadmissible parameters: need m < z, z' < m+1 for some integer m");
  p.z = Complex(zr);
  p.zp = Complex(zpr);
  return p;
}

ZParams ZParams::make_exact(const Rational& z, const Rational& zp) {
  check_complementary(z, zp);
  ZParams p;
  p.exact = true;
  p.zr = z;
  p.zpr = zp;
  p.z = Complex(z.get_d());
  p.zp = Complex(zp.get_d());
  return p;
}

ZParams ZParams::parse(const std::string& z, const std::string& zp) {
  if (looks_complex(z) || looks_complex(zp))
    return make(parse_complex(z), parse_complex(zp));
  return make_exact(parse_rational(z), parse_rational(zp));
}

MixedZParams MixedZParams::make(const ZParams& base, double xi) {
  if (!(xi > 0.0 && xi < 1.0))
    throw std::invalid_argument("xi must lie in (0,1)");
  MixedZParams mp;
  mp.base = base;
  mp.xi = xi;
  return mp;
}

MixedZParams MixedZParams::make_exact(const ZParams& base, const Rational& xi) {
  MixedZParams mp = make(base, xi.get_d());
  mp.xi_exact = true;
  mp.xi_r = xi;
  return mp;
}

MixedZParams MixedZParams::parse(const std::string& z, const std::string& zp,
                                 const std::string& xi) {
  return make_exact(ZParams::parse(z, zp), parse_rational(xi));
}

// ---------------------------------------------------------------------------

Rational weight_n_exact(const Partition& lambda, const ZParams& zp) {
  if (!zp.exact)
    throw std::logic_error("weight_n_exact: parameters not rational");
  const long n = lambda.size();
  Rational prod(1);
  for (int c : lambda.contents())
    prod *= (zp.zr + Rational(c)) * (zp.zpr + Rational(c));
  Integer d = lambda.dim_hook();
  Rational w = prod * Rational(d * d, factorial(n)) /
               pochhammer(zp.zzp_exact(), n);
  w.canonicalize();
  return w;
}

double weight_n(const Partition& lambda, const ZParams& zp) {
  if (zp.exact) return weight_n_exact(lambda, zp).get_d();
  const long n = lambda.size();
  Complex prod(1);
  for (int c : lambda.contents())
    prod *= (zp.z + Complex(c)) * (zp.zp + Complex(c));
  double d = lambda.dim_hook().get_d();
  Complex w = prod * d * d / factorial(n).get_d() /
              pochhammer(Complex(zp.zzp()), n);
  if (std::abs(w.imag()) > 1e-9 * std::max(1.0, std::abs(w)))
    throw std::runtime_error("weight_n: nonreal value for principal series");
  return w.real();
}

double weight_mixed(const Partition& lambda, const MixedZParams& mp) {
  const long n = lambda.size();
  double zz = mp.base.zzp();
  double mix = std::exp(zz * std::log1p(-mp.xi)) *
               pochhammer(zz, n) * std::pow(mp.xi, n) /
               factorial(n).get_d();
  return weight_n(lambda, mp.base) * mix;
}

Rational weight_mixed_ratio_exact(const Partition& lambda,
                                  const MixedZParams& mp) {
  if (!mp.exact())
    throw std::logic_error("weight_mixed_ratio_exact: parameters not rational");
  const long n = lambda.size();
  Rational r = weight_n_exact(lambda, mp.base) *
               pochhammer(mp.base.zzp_exact(), n) * ipow(mp.xi_r, n) /
               Rational(factorial(n));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

Rational expect_fs_exact(const Partition& mu, const MixedZParams& mp) {
  if (!mp.exact())
    throw std::logic_error("expect_fs_exact: parameters not rational");
  const long m = mu.size();
  Rational prod(1);
  for (int c : mu.contents())
    prod *= (mp.base.zr + Rational(c)) * (mp.base.zpr + Rational(c));
  Rational r = ipow(Rational(mp.xi_r / (Rational(1) - mp.xi_r)), m) * prod *
               Rational(mu.dim_hook(), factorial(m));
  r.canonicalize();
  return r;
}

Complex expect_fs(const Partition& mu, const MixedZParams& mp) {
  if (mp.exact()) return Complex(expect_fs_exact(mu, mp).get_d());
  const long m = mu.size();
  Complex prod(1);
  for (int c : mu.contents())
    prod *= (mp.base.z + Complex(c)) * (mp.base.zp + Complex(c));
  return std::pow(mp.xi / (1.0 - mp.xi), double(m)) * prod *
         (mu.dim_hook().get_d() / factorial(m).get_d());
}

Rational giambelli_expectation_check_exact(const Partition& lambda,
                                           const MixedZParams& mp) {
  Rational lhs = expect_fs_exact(lambda, mp);
  FrobeniusCoords fc = lambda.frobenius();
  const int d = fc.d();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m[i][j] = expect_fs_exact(Partition::hook(fc.p[i], fc.q[j]), mp);
  Rational res = lhs - det(m);
  return res < 0 ? Rational(-res) : res;
}

double giambelli_expectation_check(const Partition& lambda,
                                   const MixedZParams& mp) {
  if (mp.exact())
    return giambelli_expectation_check_exact(lambda, mp).get_d();
  Complex lhs = expect_fs(lambda, mp);
  FrobeniusCoords fc = lambda.frobenius();
  const int d = fc.d();
  std::vector<std::vector<Complex>> m(d, std::vector<Complex>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m[i][j] = expect_fs(Partition::hook(fc.p[i], fc.q[j]), mp);
  return std::abs(lhs - det(m));
}

// ---------------------------------------------------------------------------

Rational transition_prob_exact(const Partition& mu, const Partition& lambda,
                               const ZParams& zp) {
  if (!zp.exact)
    throw std::logic_error("transition_prob_exact: parameters not rational");
  const long n = mu.size();
  int content = 0;
  bool found = false;
  for (const auto& [succ, c] : mu.successors())
    if (succ == lambda) {
      content = c;
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("transition_prob: not a cover pair");
  Rational r = (zp.zr + Rational(content)) * (zp.zpr + Rational(content)) *
               Rational(lambda.dim_hook(), mu.dim_hook()) /
               ((zp.zzp_exact() + Rational(n)) * Rational(n + 1));
  r.canonicalize();
  return r;
}

double transition_prob(const Partition& mu, const Partition& lambda,
                       const ZParams& zp) {
  if (zp.exact) return transition_prob_exact(mu, lambda, zp).get_d();
  const long n = mu.size();
  int content = 0;
  bool found = false;
  for (const auto& [succ, c] : mu.successors())
    if (succ == lambda) {
      content = c;
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("transition_prob: not a cover pair");
  Complex num = (zp.z + Complex(content)) * (zp.zp + Complex(content));
  double dimratio = Rational(lambda.dim_hook(), mu.dim_hook()).get_d();
  return num.real() * dimratio / ((zp.zzp() + n) * (n + 1));
}

// ---------------------------------------------------------------------------
// Growth chain.  The dimension ratios for all candidate boxes come from
// Kerov's corner formula: with addable-corner contents x_1 < ... < x_r and
// removable-corner contents y_1 < ... < y_{r-1},
//   dim(mu + box_k) / ((n+1) dim mu)
//     = prod_i (x_k - y_i) / prod_{i != k} (x_k - x_i),
// so each step costs O(r^2) in the number of corners.
// ---------------------------------------------------------------------------

namespace {

struct Corners {
  std::vector<int> rows;  // 1-based row index of each addable corner
  std::vector<int> x;     // contents of addable corners
  std::vector<int> y;     // contents of removable corners
};

Corners find_corners(const std::vector<int>& parts) {
  Corners c;
  const int len = static_cast<int>(parts.size());
  for (int i = 1; i <= len + 1; ++i) {
    int row = (i <= len) ? parts[i - 1] : 0;
    int above = (i == 1) ? -1 : parts[i - 2];
    if (i == 1 || row < above) {
      c.rows.push_back(i);
      c.x.push_back(row + 1 - i);
    }
    if (i <= len && (i == len || parts[i] < row)) c.y.push_back(row - i);
  }
  return c;
}

}  // namespace

Partition grow_chain(int n, const ZParams& zp, std::mt19937_64& rng) {
  std::vector<int> parts;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double zre = zp.z.real(), zim = zp.z.imag();
  std::vector<double> w;
  for (int step = 0; step < n; ++step) {
    Corners c = find_corners(parts);
    const int r = static_cast<int>(c.x.size());
    w.assign(r, 0.0);
    double total = 0.0;
    for (int k = 0; k < r; ++k) {
      double p = 1.0;
      for (int i = 0; i < static_cast<int>(c.y.size()); ++i)
        p *= double(c.x[k] - c.y[i]);
      for (int i = 0; i < r; ++i)
        if (i != k) p /= double(c.x[k] - c.x[i]);
      // (z+c)(z'+c): |z+c|^2 in the principal case.
      double zc = zp.principal
                      ? (zre + c.x[k]) * (zre + c.x[k]) + zim * zim
                      : (zre + c.x[k]) * (zp.zp.real() + c.x[k]);
      w[k] = p * zc;
      total += w[k];
    }
    double u = unif(rng) * total;
    int pick = r - 1;
    double acc = 0.0;
    for (int k = 0; k < r; ++k) {
      acc += w[k];
      if (u <= acc) { pick = k; break; }
    }
    int row = c.rows[pick];
    if (row <= static_cast<int>(parts.size()))
      parts[row - 1] += 1;
    else
      parts.push_back(1);
  }
  return Partition::from_parts(parts);
}

Partition sample_mixed(const MixedZParams& mp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double zz = mp.base.zzp();
  double u = unif(rng);
  double term = std::exp(zz * std::log1p(-mp.xi));  // P(n=0)
  double acc = term;
  long n = 0;
  while (u > acc) {
    term *= (zz + n) * mp.xi / (n + 1);
    acc += term;
    ++n;
    if (n > 100000)
      throw std::runtime_error("sample_mixed: size draw did not terminate");
  }
  return grow_chain(static_cast<int>(n), mp.base, rng);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace giambelli
