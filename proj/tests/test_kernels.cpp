#include <doctest.h>

#include <cmath>

#include "giambelli/kernels.hpp"

using namespace giambelli;

namespace {
const MixedZParams kComp = MixedZParams::parse("1/2", "1/2", "1/4");
}

TEST_CASE("two-point average limits") {
  MixedZParams tiny = MixedZParams::parse("1/2", "1/2", "1/100000");
  Complex v = two_point_avg_discrete(Complex(2.3), Complex(3.1), tiny);
  CHECK(std::abs(v - Complex(1.0)) < 1e-3);
}

TEST_CASE("m matrix limits") {
  MixedZParams tiny = MixedZParams::parse("1/2", "1/2", "1/100000");
  MMatrix m = m_matrix_discrete(Complex(2.3, 1.1), tiny);
  CHECK(std::abs(m.m11 - Complex(1.0)) < 1e-3);
  CHECK(std::abs(m.m22 - Complex(1.0)) < 1e-3);
  CHECK(std::abs(m.m12) < 1e-2);
  CHECK(std::abs(m.m21) < 1e-2);

  // m(u) -> identity as |u| grows
  MMatrix big = m_matrix_discrete(Complex(1000.0, 1000.0), kComp);
  CHECK(std::abs(big.m11 - Complex(1.0)) < 1e-2);
  CHECK(std::abs(big.m22 - Complex(1.0)) < 1e-2);
  CHECK(std::abs(big.m12) < 1e-2);
  CHECK(std::abs(big.m21) < 1e-2);
}

TEST_CASE("matrix factorization of the two-point average") {
  const Complex pts[][2] = {{{2.3, 1.0}, {3.1, -0.7}},
                            {{1.7, 2.0}, {2.6, 1.1}},
                            {{4.2, -1.5}, {1.9, 0.8}}};
  for (const auto& p : pts) {
    Complex u = p[0], v = p[1];
    MMatrix mu = m_matrix_discrete(u, kComp);
    MMatrix mv = m_matrix_discrete(v, kComp);
    Complex lhs = two_point_EH(u, v, kComp);
    Complex rhs = mv.m11 * mu.m22 - mv.m21 * mu.m12;
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("discrete weight function") {
  // x = 1/2: (zz')^{1/4} xi^{1/4} (1-xi)^{(z+z')/2}
  double expect = std::pow(0.25, 0.25) * std::pow(0.25, 0.25) *
                  std::pow(0.75, 0.5);
  CHECK(h_weight(1, kComp) == doctest::Approx(expect).epsilon(1e-13));
  for (int x2 = -21; x2 <= 21; x2 += 2) CHECK(h_weight(x2, kComp) > 0);

  MixedZParams pr =
      MixedZParams::make(ZParams::parse("0.5+1i", "0.5-1i"), 0.25);
  for (int x2 : {1, -1, 5, -5}) CHECK(std::isfinite(h_weight(x2, pr)));
}

TEST_CASE("kernel symmetry and gauge invariance") {
  for (int x2 : {1, -3, 5})
    for (int y2 : {-1, 3}) {
      // rho_2 determinant invariant under swapping the points
      CHECK(rho_m_det({x2, y2}, kComp) ==
            doctest::Approx(rho_m_det({y2, x2}, kComp)).epsilon(1e-12));
      // the residue form is a gauge transform: determinants must agree
      CHECK(rho_m_det({x2, y2}, kComp) ==
            doctest::Approx(rho_m_det({x2, y2}, kComp, true))
                .epsilon(1e-8));
    }
  // diagonal values agree between the two forms
  for (int x2 : {1, -1, 3, -3})
    CHECK(kernel_discrete(x2, x2, kComp) ==
          doctest::Approx(kernel_via_residues(x2, x2, kComp)).epsilon(1e-7));
}

TEST_CASE("jump residual small on the window") {
  for (int x2 : {1, -1, 3, -3}) CHECK(jump_check(x2, kComp) < 1e-9);
}

TEST_CASE("continuous kernel pieces") {
  ZParams zp = ZParams::parse("1/3", "2/3");
  // h(x) for x > 0
  double x = 1.7;
  double expect = std::pow(2.0 / 9.0, 0.25) * std::pow(x, 0.5) *
                  std::exp(-x / 2) /
                  std::sqrt(std::tgamma(4.0 / 3.0) * std::tgamma(5.0 / 3.0));
  CHECK(h_whittaker(x, zp) == doctest::Approx(expect).epsilon(1e-12));

  // large u, v: the average tends to 1
  Complex v = two_point_avg_omega(Complex(50.0), Complex(60.0), zp);
  CHECK(std::abs(v - Complex(1.0)) < 0.1);

  // grid scan: finite, no branch jumps
  for (double s : {-1.0, 1.0})
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0})
      CHECK(std::isfinite(kernel_whittaker(s * t, s * t, zp)));

  // parameters outside the continuous regime are rejected
  CHECK_THROWS(kernel_whittaker(1.0, 1.0, ZParams::parse("4/3", "5/3")));
}
