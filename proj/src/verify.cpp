#include "giambelli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "giambelli/kernels.hpp"
#include "giambelli/ope.hpp"
#include "giambelli/oracle.hpp"

namespace giambelli {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CheckResult check(const std::string& name, double residual, double tol,
                  const std::string& detail = "") {
  CheckResult c;
  c.name = name;
  c.residual = residual;
  c.pass = residual < tol;
  c.detail = detail.empty() ? ("tol " + fmt(tol)) : detail;
  return c;
}

std::vector<Partition> partitions_up_to(int max_size, int min_size = 0) {
  std::vector<Partition> out;
  for (int n = min_size; n <= max_size; ++n)
    for (const Partition& p : enumerate_partitions(n)) out.push_back(p);
  return out;
}

}  // namespace

SuiteReport verify_giambelli(int max_size) {
  SuiteReport rep;
  rep.suite = "giambelli";
  auto lambdas = partitions_up_to(max_size, 1);

  struct { const char *z, *zp, *xi; } exact_params[] = {
      {"1/2", "1/2", "1/4"}, {"1/3", "2/3", "1/10"}};
  for (const auto& prm : exact_params) {
    MixedZParams mp = MixedZParams::parse(prm.z, prm.zp, prm.xi);
    bool all_zero = true;
    for (const Partition& lam : lambdas)
      if (giambelli_expectation_check_exact(lam, mp) != 0) all_zero = false;
    CheckResult c;
    c.name = std::string("exact residual, z=") + prm.z + " z'=" + prm.zp +
             " xi=" + prm.xi;
    c.pass = all_zero;
    c.residual = all_zero ? 0.0 : 1.0;
    c.detail = "must vanish identically in rational arithmetic";
    rep.checks.push_back(c);
  }

  MixedZParams principal =
      MixedZParams::make(ZParams::make(Complex(0.5, 1.0), Complex(0.5, -1.0)),
                         0.25);
  double worst = 0.0;
  for (const Partition& lam : lambdas)
    worst = std::max(worst, giambelli_expectation_check(lam, principal));
  rep.checks.push_back(
      check("float residual, z=1/2+1i (principal series)", worst, 1e-12));
  return rep;
}

SuiteReport verify_expect_fs() {
  SuiteReport rep;
  rep.suite = "expect-fs";
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  double worst_diff = 0.0, worst_tail = 0.0;
  for (const Partition& mu : partitions_up_to(4)) {
    const long m = mu.size();
    double closed = expect_fs_exact(mu, mp).get_d();
    auto f = [&](const Partition& lam) {
      return Complex(frobenius_schur_at(mu, lam).get_d());
    };
    auto env = [m](long n) { return std::pow(double(n), double(m)); };
    TruncationReport tr = brute_expect(f, mp, 1e-10, env);
    worst_tail = std::max(worst_tail, tr.tail);
    double diff = std::abs(tr.value - Complex(closed));
    worst_diff = std::max(worst_diff, std::max(diff - tr.tail, 0.0));
  }
  rep.checks.push_back(check("brute-force agreement beyond tail", worst_diff,
                             1e-12, "difference must be within the tail"));
  rep.checks.push_back(check("tail bound size", worst_tail, 1e-10));
  return rep;
}

SuiteReport verify_two_point() {
  SuiteReport rep;
  rep.suite = "two-point";
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  const Complex pts[][2] = {
      {{2.3, 0.0}, {3.1, 0.0}},  {{3.7, 0.0}, {2.2, 0.0}},
      {{4.6, 0.0}, {5.9, 0.0}},  {{2.9, 0.0}, {4.8, 0.0}},
      {{5.3, 0.0}, {3.6, 0.0}},  {{1.8, 2.5}, {2.7, 1.4}},
      {{3.1, -2.2}, {2.6, 3.0}}, {{-2.4, 1.9}, {4.2, -2.8}},
      {{6.1, 0.7}, {-3.8, 2.2}}, {{2.0, 2.0}, {3.0, -1.0}}};
  double worst = 0.0;
  for (const auto& p : pts) {
    Complex u = p[0], v = p[1];
    Complex closed = two_point_avg_discrete(u, v, mp);
    auto f = [&](const Partition& lam) {
      return H_at_partition(u, lam) * E_at_partition(v, lam);
    };
    auto env = [&](long n) { return he_envelope(u, n) * he_envelope(v, n); };
    TruncationReport tr = brute_expect(f, mp, 1e-9, env);
    worst = std::max(worst, std::abs(closed - tr.value));
  }
  rep.checks.push_back(
      check("closed form vs brute force, 10 points", worst, 1e-8));
  return rep;
}

SuiteReport verify_det_identity() {
  SuiteReport rep;
  rep.suite = "determinantal-identity";
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  {
    std::vector<Complex> us{{2.3, 0.0}, {3.4, 0.0}};
    std::vector<Complex> vs{{1.7, 0.0}, {2.9, 0.0}};
    rep.checks.push_back(
        check("degree 2", determinantal_identity_check(us, vs, mp, 1e-9),
              1e-7));
  }
  {
    std::vector<Complex> us{{2.3, 0.0}, {3.4, 0.0}, {4.6, 0.0}};
    std::vector<Complex> vs{{1.7, 0.0}, {2.9, 0.0}, {3.8, 0.0}};
    rep.checks.push_back(
        check("degree 3", determinantal_identity_check(us, vs, mp, 1e-9),
              1e-7));
  }
  return rep;
}

SuiteReport verify_kernel_vs_oracle() {
  SuiteReport rep;
  rep.suite = "kernel-vs-oracle";
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  const std::vector<int> pts{1, -1, 3, -3, 5, -5};
  double worst_block = 0.0, worst_res = 0.0;
  int count = 0;
  for (int m = 1; m <= 3; ++m) {
    for (const auto& idx : subsets(static_cast<int>(pts.size()), m)) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(pts[i]);
      double brute = brute_corr(sub, mp, 1e-9).value.real();
      worst_block =
          std::max(worst_block, std::abs(rho_m_det(sub, mp, false) - brute));
      worst_res =
          std::max(worst_res, std::abs(rho_m_det(sub, mp, true) - brute));
      ++count;
    }
  }
  rep.checks.push_back(check("block kernel determinants, " +
                                 std::to_string(count) + " subsets",
                             worst_block, 1e-8));
  rep.checks.push_back(
      check("residue kernel determinants", worst_res, 1e-8));
  return rep;
}

SuiteReport verify_jump() {
  SuiteReport rep;
  rep.suite = "jump";
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  double worst = 0.0;
  for (int x2 : {1, -1, 3, -3, 5, -5, 7, -7})
    worst = std::max(worst, jump_check(x2, mp));
  rep.checks.push_back(check("residue/jump condition, |x| <= 7/2", worst,
                             1e-9));

  std::mt19937_64 rng = substream(101, 0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst46c = 0.0;
  for (int k = 0; k < 20; ++k) {
    Complex u(1.6 + 3.0 * unif(rng), 0.6 + 2.5 * unif(rng));
    Complex v(1.4 + 3.2 * unif(rng), -0.5 - 2.1 * unif(rng));
    Complex lhs = two_point_EH(u, v, mp);
    MMatrix mu = m_matrix_discrete(u, mp);
    MMatrix mv = m_matrix_discrete(v, mp);
    Complex rhs = mv.m11 * mu.m22 - mv.m21 * mu.m12;
    worst46c = std::max(worst46c, std::abs(lhs - rhs));
  }
  rep.checks.push_back(
      check("matrix factorization of <E(-v)H(u)>, 20 points", worst46c,
            1e-10));
  return rep;
}

SuiteReport verify_sampler(int samples, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "sampler";
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "2/3");

  std::vector<long> size_count;
  std::vector<std::vector<int>> configs(samples);
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng = substream(seed, static_cast<std::uint64_t>(s));
    Partition lam = sample_mixed(mp, rng);
    size_t n = static_cast<size_t>(lam.size());
    if (size_count.size() <= n) size_count.resize(n + 1, 0);
    ++size_count[n];
    configs[s] = lam.lattice_config();
  }

  // chi^2 of the size distribution against the negative-binomial law,
  // merging bins so every expected count is >= 5; the final cell absorbs
  // all the remaining tail mass.
  const size_t nmax = size_count.size();
  double zz = mp.base.zzp();
  double term = std::exp(zz * std::log1p(-mp.xi)) * samples;
  std::vector<double> expected(nmax + 1, 0.0);
  double cum = 0.0;
  for (size_t n = 0; n < nmax; ++n) {
    expected[n] = term;
    cum += term;
    term *= (zz + n) * mp.xi / (n + 1);
  }
  expected[nmax] = samples - cum;
  std::vector<std::pair<double, double>> cells;  // (expected, observed)
  double e_acc = 0.0, o_acc = 0.0;
  for (size_t n = 0; n <= nmax; ++n) {
    e_acc += expected[n];
    o_acc += n < nmax ? size_count[n] : 0;
    if (e_acc >= 5.0) {
      cells.emplace_back(e_acc, o_acc);
      e_acc = o_acc = 0.0;
    }
  }
  if (e_acc > 0.0) {
    cells.back().first += e_acc;
    cells.back().second += o_acc;
  }
  double chi2 = 0.0;
  for (const auto& [e, o] : cells) chi2 += (o - e) * (o - e) / e;
  const int bins = static_cast<int>(cells.size());
  boost::math::chi_squared dist(bins - 1);
  double pvalue = boost::math::cdf(boost::math::complement(dist, chi2));
  CheckResult cs;
  cs.name = "size-law chi^2";
  cs.pass = pvalue > 0.01;
  cs.residual = pvalue;
  cs.detail = "p-value (must exceed 0.01), chi2 = " + fmt(chi2) + ", bins = " +
              std::to_string(bins);
  rep.checks.push_back(cs);

  double worst_sigmas = 0.0;
  for (int x2 : {1, -1, 3, -3}) {
    long hits = 0;
    for (const auto& cfg : configs)
      if (std::find(cfg.begin(), cfg.end(), x2) != cfg.end()) ++hits;
    double phat = double(hits) / samples;
    double target = kernel_discrete(x2, x2, mp);
    double se = std::sqrt(std::max(phat * (1 - phat), 1e-12) / samples);
    worst_sigmas = std::max(worst_sigmas, std::abs(phat - target) / se);
  }
  rep.checks.push_back(check("one-point correlations (standard errors)",
                             worst_sigmas, 4.0, "must stay below 4 SE"));
  return rep;
}

SuiteReport verify_ope() {
  SuiteReport rep;
  rep.suite = "ope";

  auto rat = [](long n, long d = 1) { return Rational(n, d); };
  std::vector<EnsembleSpec> specs;
  {
    DiscreteMeasure uniform({rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)},
                            std::vector<Rational>(6, rat(1)));
    specs.emplace_back(uniform, 3);
    DiscreteMeasure geo({rat(1), rat(2), rat(3), rat(4), rat(5)},
                        {rat(1), rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16)});
    specs.emplace_back(geo, 3);
    DiscreteMeasure asym(
        {rat(-3), rat(-1), rat(1, 2), rat(2), rat(7, 2), rat(5), rat(7)},
        {rat(2), rat(1), rat(3), rat(1, 3), rat(1), rat(2, 5), rat(1)});
    specs.emplace_back(asym, 4);
  }

  bool norm_ok = true, z_ok = true, schur_ok = true, giam_ok = true,
       ortho_ok = true, rho_ok = true, detid_ok = true;
  for (const auto& spec : specs) {
    const int M = spec.measure.size();
    Rational total(0);
    for (const auto& idx : subsets(M, spec.N))
      total += ensemble_prob(idx, spec);
    if (total != 1) norm_ok = false;

    if (partition_function(spec) != partition_function_det(spec)) z_ok = false;

    for (const Partition& lam : partitions_up_to(6))
      if (avg_schur(lam, spec) != avg_schur_enum(lam, spec)) schur_ok = false;

    for (const Partition& lam : partitions_up_to(8, 1))
      if (giambelli_check_ope(lam, spec) != 0) giam_ok = false;

    for (int k = 1; k < M; ++k) {
      auto pk = orthopoly(spec.measure, k);
      for (int j = 0; j < k; ++j) {
        auto pj = orthopoly(spec.measure, j);
        Rational inner(0);
        for (size_t a = 0; a < pk.size(); ++a)
          for (size_t b = 0; b < pj.size(); ++b)
            inner += pk[a] * pj[b] *
                     spec.measure.moment(static_cast<long>(a + b));
        if (inner != 0) ortho_ok = false;
      }
    }

    for (int m = 1; m <= 3; ++m)
      for (const auto& idx : subsets(M, m)) {
        std::vector<Rational> pts;
        for (int i : idx) pts.push_back(spec.measure.atoms[i]);
        Rational brute = brute_rho(pts, spec);
        if (rho_det_cd(pts, spec) != brute) rho_ok = false;
        if (rho_det_residue(pts, spec) != brute) rho_ok = false;
      }

    std::vector<Rational> us{rat(17, 2), rat(23, 2)};
    std::vector<Rational> vs{rat(15, 2), rat(21, 2)};
    if (determinantal_identity_ope(us, vs, spec) != 0) detid_ok = false;
  }

  auto exact = [](const std::string& name, bool ok) {
    CheckResult c;
    c.name = name;
    c.pass = ok;
    c.residual = ok ? 0.0 : 1.0;
    c.detail = "exact rational, must vanish";
    return c;
  };
  rep.checks.push_back(exact("normalization", norm_ok));
  rep.checks.push_back(exact("partition function vs moment determinant",
                             z_ok));
  rep.checks.push_back(exact("schur averages: determinant vs enumeration",
                             schur_ok));
  rep.checks.push_back(exact("giambelli residuals, |lambda| <= 8", giam_ok));
  rep.checks.push_back(exact("orthogonality of monic polynomials", ortho_ok));
  rep.checks.push_back(
      exact("rho_m: brute force = CD kernel = residue kernel", rho_ok));
  rep.checks.push_back(exact("determinantal identity, degree 2", detid_ok));
  return rep;
}

SuiteReport verify_whittaker(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "whittaker";
  ZParams zp = ZParams::parse("1/3", "2/3");
  const Complex z = zp.z, z2 = zp.zp;
  const double zz = zp.zzp();

  {
    // hook-sum form of the two-point average at u = v = 5
    const double u = 5.0, v = 5.0;
    double sum = 1.0;
    // 40x40 hook terms reach far below the tolerance at u = v = 5 while the
    // Pochhammer products stay inside double range
    for (int p = 0; p < 40; ++p)
      for (int q = 0; q < 40; ++q) {
        Complex t = pochhammer(z + 1.0, p) * pochhammer(z2 + 1.0, p) *
                    pochhammer(-z + 1.0, q) * pochhammer(-z2 + 1.0, q) /
                    (pochhammer(Complex(zz + 1.0), p + q) *
                     factorial(p).get_d() * factorial(q).get_d() *
                     double(p + q + 1));
        sum += (u + v) * t.real() / std::pow(u, p + 1) / std::pow(v, q + 1);
      }
    Complex f3val = two_point_avg_omega(Complex(u), Complex(v), zp);
    rep.checks.push_back(check("two-variable series vs hook sum, u=v=5",
                               std::abs(f3val - Complex(sum)), 1e-8));
  }

  {
    double worst = 0.0;
    const double cases[][2] = {{0.25, 2.0}, {0.7, 1.3}, {0.0, 3.0}};
    for (const auto& c : cases) {
      double mu = c[0], x = c[1];
      double w = whittaker_w(mu + 0.5, mu, x);
      double closed = std::pow(x, mu + 0.5) * std::exp(-x / 2);
      worst = std::max(worst, std::abs(w - closed));
    }
    rep.checks.push_back(
        check("degenerate Whittaker closed form", worst, 1e-10));
  }

  const int chain_n = 400, mc_samples = 20000;
  {
    Complex target = two_point_avg_omega(Complex(5.0), Complex(5.0), zp);
    auto f = [&](const OmegaPoint& om) {
      return H_at_omega(Complex(5.0), om) * E_at_omega(Complex(5.0), om);
    };
    auto [mean, se] = mc_expect_omega(f, zp, chain_n, mc_samples, seed, false);
    double sigmas = std::abs(mean - target) / se;
    rep.checks.push_back(check("Monte Carlo vs series (standard errors)",
                               sigmas, 3.0,
                               "mean " + fmt(mean.real()) + ", target " +
                                   fmt(target.real()) + ", se " + fmt(se)));
  }
  {
    Complex u(-9.0), v(-7.0);
    Complex target = two_point_avg_tilde(u, v, zp);
    auto f = [&](const OmegaPoint& om) {
      return H_at_omega(u, om) * E_at_omega(v, om);
    };
    auto [mean, se] =
        mc_expect_omega(f, zp, chain_n, mc_samples, seed + 1, true);
    double sigmas = std::abs(mean - target) / se;
    rep.checks.push_back(
        check("Monte Carlo vs Whittaker product (standard errors)", sigmas,
              3.0,
              "mean " + fmt(mean.real()) + ", target " + fmt(target.real()) +
                  ", se " + fmt(se)));
  }

  {
    double most_negative = 0.0;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0})
      for (double s : {1.0, -1.0}) {
        double rho1 = kernel_whittaker(s * x, s * x, zp);
        most_negative = std::min(most_negative, rho1);
      }
    rep.checks.push_back(check("one-point function nonnegative on grid",
                               -most_negative, 1e-10));
  }
  return rep;
}

SuiteReport verify_scaling() {
  SuiteReport rep;
  rep.suite = "scaling";
  ZParams zp = ZParams::parse("1/3", "2/3");
  const double xi = 0.99;
  MixedZParams mp = MixedZParams::make(zp, xi);
  PrecisionPolicy pp;
  pp.max_terms = 40000;
  double worst = 0.0;
  for (int x2 : {49, 99, -49, -99}) {
    double big_x = 0.5 * x2;
    double small_x = (1 - xi) * big_x;
    double rho_disc = kernel_discrete(x2, x2, mp, pp) / (1 - xi);
    double rho_cont = kernel_whittaker(small_x, small_x, zp);
    worst = std::max(worst, std::abs(rho_disc / rho_cont - 1.0));
  }
  CheckResult c;
  c.name = "xi -> 1 scaling hypothesis (informational)";
  c.pass = true;  // reported, never gating
  c.residual = worst;
  c.detail = "max relative deviation (hypothesis holds if < 0.05): " +
             fmt(worst);
  rep.checks.push_back(c);
  return rep;
}

}  // namespace giambelli
