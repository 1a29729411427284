#include "giambelli/kernels.hpp"

#include <cmath>

namespace giambelli {

namespace {

double s_factor(const MixedZParams& mp) {
  return std::sqrt(mp.base.zzp() * mp.xi) / (1.0 - mp.xi);
}

double real_checked(const Complex& v, const char* what) {
  if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v)))
    throw std::runtime_error(std::string(what) + ": nonreal value");
  return v.real();
}

// Row/column data of the block kernel: at a positive argument the relevant
// entries are (m11, m21), at a negative one (m22, m12).  Defined for real t
// off the pole set, which is what the L'Hospital limits differentiate.
struct DiscPair {
  double first, second;
};

DiscPair disc_pair(double t, const MixedZParams& mp,
                   const PrecisionPolicy& pp) {
  const Complex z = mp.base.z, zp = mp.base.zp;
  const double s = s_factor(mp);
  Complex f1, f2;
  if (t > 0) {
    f1 = gauss_2f1_xi(-z, -zp, Complex(t + 0.5), mp.xi, pp);
    f2 = -s * gauss_2f1_xi(Complex(1) - z, Complex(1) - zp, Complex(t + 1.5),
                           mp.xi, pp) /
         (t + 0.5);
  } else {
    f1 = gauss_2f1_xi(z, zp, Complex(-t + 0.5), mp.xi, pp);
    f2 = s * gauss_2f1_xi(Complex(1) + z, Complex(1) + zp, Complex(-t + 1.5),
                          mp.xi, pp) /
         (-t + 0.5);
  }
  return {real_checked(f1, "m entry"), real_checked(f2, "m entry")};
}

// Off-diagonal bracket of the block kernel before the h(x)h(y)/(x-y) factor.
double disc_bracket(const DiscPair& px, const DiscPair& py, bool same_sign) {
  if (same_sign) return px.second * py.first - px.first * py.second;
  return px.first * py.first - px.second * py.second;
}

// L'Hospital completion: limit of f(t) as t -> x where f has the form
// N(t)/(t - x) with N(x) = 0.  The symmetric average (f(x+h)+f(x-h))/2
// equals the central difference quotient of N and cancels any numerical
// offset of N(x); two Richardson steps remove the h^2 and h^4 errors.
template <class F>
double diag_limit(F&& f, double x) {
  const double h0 = 0.02;
  double d[3];
  for (int k = 0; k < 3; ++k) {
    double h = h0 / (1 << k);
    d[k] = 0.5 * (f(x + h) + f(x - h));
  }
  double r1 = (4.0 * d[1] - d[0]) / 3.0;
  double r2 = (4.0 * d[2] - d[1]) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

void require_lattice(int x2) {
  if (x2 % 2 == 0)
    throw std::invalid_argument("lattice point must be a half-integer");
}

}  // namespace

Complex two_point_avg_discrete(Complex u, Complex v, const MixedZParams& mp,
                               const PrecisionPolicy& pp) {
  const Complex z = mp.base.z, zp = mp.base.zp;
  const double xi = mp.xi;
  Complex t1 = gauss_2f1_xi(z, zp, -u + 0.5, xi, pp) *
               gauss_2f1_xi(-z, -zp, -v + 0.5, xi, pp);
  Complex t2 = (z * zp) * xi /
               ((1.0 - xi) * (1.0 - xi) * (u - 0.5) * (v - 0.5)) *
               gauss_2f1_xi(z + 1.0, zp + 1.0, -u + 1.5, xi, pp) *
               gauss_2f1_xi(-z + 1.0, -zp + 1.0, -v + 1.5, xi, pp);
  return t1 + t2;
}

Complex two_point_EH(Complex u, Complex v, const MixedZParams& mp,
                     const PrecisionPolicy& pp) {
  return two_point_avg_discrete(u, -v, mp, pp);
}

MMatrix m_matrix_discrete(Complex u, const MixedZParams& mp,
                          const PrecisionPolicy& pp) {
  const Complex z = mp.base.z, zp = mp.base.zp;
  const double s = s_factor(mp);
  MMatrix m;
  m.m11 = gauss_2f1_xi(-z, -zp, u + 0.5, mp.xi, pp);
  m.m12 = s * gauss_2f1_xi(Complex(1) + z, Complex(1) + zp, -u + 1.5, mp.xi,
                           pp) /
          (-u + 0.5);
  m.m21 = -s * gauss_2f1_xi(Complex(1) - z, Complex(1) - zp, u + 1.5, mp.xi,
                            pp) /
          (u + 0.5);
  m.m22 = gauss_2f1_xi(z, zp, -u + 0.5, mp.xi, pp);
  return m;
}

// Residues in u of the matrix entries.  With c(u) = -u+1/2 (dc/du = -1) the
// residue of F(a,b;c(u);zeta) at u = n+1/2 is minus the residue in c at
// c = -n, and analogously with c(u) = u+1/2 on the negative half-lattice.
Complex res_m22(int x2, const MixedZParams& mp, const PrecisionPolicy& pp) {
  require_lattice(x2);
  if (x2 < 0) return 0.0;
  const Complex zeta = mp.xi / (mp.xi - 1.0);
  int n = (x2 - 1) / 2;
  return -residue_2f1_c(mp.base.z, mp.base.zp, n, zeta, pp);
}

Complex res_m12(int x2, const MixedZParams& mp, const PrecisionPolicy& pp) {
  require_lattice(x2);
  if (x2 < 0) return 0.0;
  const Complex zeta = mp.xi / (mp.xi - 1.0);
  const Complex z = mp.base.z, zp = mp.base.zp;
  const double s = s_factor(mp);
  if (x2 == 1)
    // simple pole of the 1/(-u+1/2) factor, F regular at c = 1
    return -s * gauss_2f1(Complex(1) + z, Complex(1) + zp, Complex(1), zeta,
                          pp);
  int n = (x2 - 3) / 2;
  double x = 0.5 * x2;
  return -s * residue_2f1_c(Complex(1) + z, Complex(1) + zp, n, zeta, pp) /
         (-x + 0.5);
}

Complex res_m11(int x2, const MixedZParams& mp, const PrecisionPolicy& pp) {
  require_lattice(x2);
  if (x2 > 0) return 0.0;
  const Complex zeta = mp.xi / (mp.xi - 1.0);
  int n = (-x2 - 1) / 2;
  return residue_2f1_c(-mp.base.z, -mp.base.zp, n, zeta, pp);
}

Complex res_m21(int x2, const MixedZParams& mp, const PrecisionPolicy& pp) {
  require_lattice(x2);
  if (x2 > 0) return 0.0;
  const Complex zeta = mp.xi / (mp.xi - 1.0);
  const Complex z = mp.base.z, zp = mp.base.zp;
  const double s = s_factor(mp);
  if (x2 == -1)
    return -s * gauss_2f1(Complex(1) - z, Complex(1) - zp, Complex(1), zeta,
                          pp);
  int n = (-x2 - 3) / 2;
  double x = 0.5 * x2;
  return -s * residue_2f1_c(Complex(1) - z, Complex(1) - zp, n, zeta, pp) /
         (x + 0.5);
}

double h_weight(int x2, const MixedZParams& mp) {
  require_lattice(x2);
  const Complex z = mp.base.z, zp = mp.base.zp;
  const double xi = mp.xi;
  const double zz = mp.base.zzp();
  const double zsum = (z + zp).real();
  double x = 0.5 * x2;
  if (x2 > 0) {
    int k = (x2 - 1) / 2;
    double prod =
        real_checked(pochhammer(z + 1.0, k) * pochhammer(zp + 1.0, k),
                     "h_weight");
    return std::pow(zz, 0.25) * std::pow(xi, x / 2) *
           std::pow(1.0 - xi, zsum / 2) * std::sqrt(prod) /
           std::tgamma(x + 0.5);
  }
  int k = (-x2 - 1) / 2;
  double prod =
      real_checked(pochhammer(1.0 - z, k) * pochhammer(1.0 - zp, k),
                   "h_weight");
  return std::pow(zz, 0.25) * std::pow(xi, -x / 2) *
         std::pow(1.0 - xi, -zsum / 2) * std::sqrt(prod) /
         std::tgamma(-x + 0.5);
}

double kernel_discrete(int x2, int y2, const MixedZParams& mp,
                       const PrecisionPolicy& pp) {
  require_lattice(x2);
  require_lattice(y2);
  double x = 0.5 * x2, y = 0.5 * y2;
  double hh = h_weight(x2, mp) * h_weight(y2, mp);
  if (x2 == y2) {
    DiscPair py = disc_pair(y, mp, pp);
    auto f = [&](double t) {
      return disc_bracket(disc_pair(t, mp, pp), py, true) / (t - y);
    };
    return hh * diag_limit(f, x);
  }
  bool same = (x2 > 0) == (y2 > 0);
  double b = disc_bracket(disc_pair(x, mp, pp), disc_pair(y, mp, pp), same);
  return hh * b / (x - y);
}

double kernel_via_residues(int x2, int y2, const MixedZParams& mp,
                           const PrecisionPolicy& pp) {
  require_lattice(x2);
  require_lattice(y2);
  double x = 0.5 * x2, y = 0.5 * y2;
  if (x2 > 0 && y2 > 0) {
    double r22 = real_checked(res_m22(y2, mp, pp), "res m22");
    double r12 = real_checked(res_m12(y2, mp, pp), "res m12");
    auto num = [&](double t) {
      DiscPair p = disc_pair(t, mp, pp);  // (m11, m21) at t > 0
      return p.first * r22 - p.second * r12;
    };
    if (x2 == y2) {
      auto f = [&](double t) { return num(t) / (t - y); };
      return diag_limit(f, x);
    }
    return num(x) / (x - y);
  }
  if (x2 > 0 && y2 < 0) {
    DiscPair px = disc_pair(x, mp, pp);  // (m11, m21)
    DiscPair py = disc_pair(y, mp, pp);  // (m22, m12)
    return (px.first * py.first - px.second * py.second) / (x - y);
  }
  if (x2 < 0 && y2 > 0) {
    double r11 = real_checked(res_m11(x2, mp, pp), "res m11");
    double r21 = real_checked(res_m21(x2, mp, pp), "res m21");
    double r22 = real_checked(res_m22(y2, mp, pp), "res m22");
    double r12 = real_checked(res_m12(y2, mp, pp), "res m12");
    return -(r11 * r22 - r21 * r12) / (x - y);
  }
  // x < 0, y < 0
  double r11 = real_checked(res_m11(x2, mp, pp), "res m11");
  double r21 = real_checked(res_m21(x2, mp, pp), "res m21");
  auto num = [&](double t) {
    DiscPair p = disc_pair(t, mp, pp);  // (m22, m12) at t < 0
    return -(r11 * p.first - r21 * p.second);
  };
  if (x2 == y2) {
    auto f = [&](double t) { return num(t) / (x - t); };
    return diag_limit(f, y);
  }
  return num(y) / (x - y);
}

double rho_m_det(const std::vector<int>& points2, const MixedZParams& mp,
                 bool residue_form, const PrecisionPolicy& pp) {
  const size_t m = points2.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (points2[i] == points2[j])
        throw std::invalid_argument("rho_m_det: repeated points");
  std::vector<std::vector<double>> k(m, std::vector<double>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      k[i][j] = residue_form
                    ? kernel_via_residues(points2[i], points2[j], mp, pp)
                    : kernel_discrete(points2[i], points2[j], mp, pp);
  return det(k);
}

double jump_check(int x2, const MixedZParams& mp, const PrecisionPolicy& pp) {
  require_lattice(x2);
  double x = 0.5 * x2;
  double h2 = h_weight(x2, mp);
  h2 *= h2;
  DiscPair p = disc_pair(x, mp, pp);
  double r1, r2, t1, t2;
  if (x2 > 0) {
    // res m12 = -h^2 m11, res m22 = -h^2 m21
    r1 = real_checked(res_m12(x2, mp, pp), "res m12");
    r2 = real_checked(res_m22(x2, mp, pp), "res m22");
    t1 = -h2 * p.first;
    t2 = -h2 * p.second;
  } else {
    // res m11 = -h^2 m12, res m21 = -h^2 m22
    r1 = real_checked(res_m11(x2, mp, pp), "res m11");
    r2 = real_checked(res_m21(x2, mp, pp), "res m21");
    t1 = -h2 * p.second;
    t2 = -h2 * p.first;
  }
  return std::max(std::abs(r1 - t1), std::abs(r2 - t2));
}

// ---------------------------------------------------------------------------
// Whittaker side.
// ---------------------------------------------------------------------------

namespace {

struct WParams {
  double z, zp, zz, mu;
};

WParams w_params(const ZParams& zp) {
  if (zp.principal)
    throw std::domain_error(
        "whittaker kernel: parameters must be real (complementary series)");
  double z = zp.z.real(), z2 = zp.zp.real();
  if (std::abs(z) >= 1.0 || std::abs(z2) >= 1.0 || z == 0.0 || z2 == 0.0)
    throw std::domain_error(
        "whittaker kernel: need 0 < |z|, |z'| < 1");
  return {z, z2, z * z2, (z - z2) / 2};
}

DiscPair whittaker_pair(double t, const WParams& w, const PrecisionPolicy& pp) {
  double zs = w.z + w.zp;
  double root = std::sqrt(w.zz);
  if (t > 0) {
    double pref = std::pow(t, -(zs + 1) / 2) * std::exp(t / 2);
    double m11 = pref * whittaker_w((zs + 1) / 2, w.mu, t, pp);
    double m21 = -root * pref * whittaker_w((zs - 1) / 2, w.mu, t, pp);
    return {m11, m21};
  }
  double p = -t;
  double pref = std::pow(p, (zs - 1) / 2) * std::exp(p / 2);
  double m22 = pref * whittaker_w((-zs + 1) / 2, w.mu, p, pp);
  double m12 = root * pref * whittaker_w((-zs - 1) / 2, w.mu, p, pp);
  return {m22, m12};
}

}  // namespace

Complex two_point_avg_omega(Complex u, Complex v, const ZParams& zp,
                            const PrecisionPolicy& pp) {
  const Complex z = zp.z, z2 = zp.zp;
  Complex zz = z * z2;
  Complex iu = Complex(1) / u, iv = Complex(1) / v;
  Complex t1 = f3(z, -z, z2, -z2, zz, iu, iv, pp);
  Complex t2 = f3(z + 1.0, -z + 1.0, z2 + 1.0, -z2 + 1.0, zz + 2.0, iu, iv,
                  pp) /
               (u * v * (zz + 1.0));
  return t1 + t2;
}

Complex two_point_avg_tilde(Complex u, Complex v, const ZParams& zp,
                            const PrecisionPolicy& pp) {
  WParams w = w_params(zp);
  double zs = w.z + w.zp;
  Complex mu = -u, mv = -v;
  if (!(mu.real() > 0) || !(mv.real() > 0))
    throw std::domain_error("two_point_avg_tilde: need Re u < 0, Re v < 0");
  Complex pv = std::pow(mv, -(zs + 1) / 2);
  Complex pu = std::pow(mu, (zs - 1) / 2);
  Complex t1 = pv * whittaker_w((zs + 1) / 2, w.mu, mv, pp) * pu *
               whittaker_w((-zs + 1) / 2, w.mu, mu, pp);
  Complex t2 = w.zz * pv * whittaker_w((zs - 1) / 2, w.mu, mv, pp) * pu *
               whittaker_w(-(zs + 1) / 2, w.mu, mu, pp);
  return std::exp(-(u + v) / 2.0) * (t1 + t2);
}

double h_whittaker(double x, const ZParams& zp) {
  WParams w = w_params(zp);
  double zs = w.z + w.zp;
  double quarter = std::pow(w.zz, 0.25);
  if (x > 0)
    return quarter * std::pow(x, zs / 2) * std::exp(-x / 2) /
           std::sqrt(std::tgamma(w.z + 1) * std::tgamma(w.zp + 1));
  if (x < 0)
    return quarter * std::pow(-x, -zs / 2) * std::exp(x / 2) /
           std::sqrt(std::tgamma(-w.z + 1) * std::tgamma(-w.zp + 1));
  throw std::domain_error("h_whittaker: x = 0");
}

double kernel_whittaker(double x, double y, const ZParams& zp,
                        const PrecisionPolicy& pp) {
  if (x == 0.0 || y == 0.0)
    throw std::domain_error("kernel_whittaker: point at 0");
  WParams w = w_params(zp);
  double hh = h_whittaker(x, zp) * h_whittaker(y, zp);
  if (x == y) {
    DiscPair py = whittaker_pair(y, w, pp);
    auto f = [&](double t) {
      return disc_bracket(whittaker_pair(t, w, pp), py, true) / (t - y);
    };
    return hh * diag_limit(f, x);
  }
  bool same = (x > 0) == (y > 0);
  double b =
      disc_bracket(whittaker_pair(x, w, pp), whittaker_pair(y, w, pp), same);
  return hh * b / (x - y);
}

}  // namespace giambelli
