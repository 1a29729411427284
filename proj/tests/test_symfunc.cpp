#include <doctest.h>

#include <random>

#include "giambelli/symfunc.hpp"

using namespace giambelli;

namespace {

// s_lambda by explicit monomial expansion over all fillings of exponents:
// sum over column-strict tableaux is overkill; instead use the bialternant
// at distinct points, which is an independent algorithm.
Rational schur_bialt(const Partition& lam, const std::vector<Rational>& xs) {
  return schur_bialternant(lam, xs);
}

}  // namespace

TEST_CASE("schur evaluation basics") {
  std::vector<Rational> xs{Rational(2), Rational(3)};
  CHECK(schur_at_points(Partition(), xs) == 1);
  CHECK(schur_at_points(Partition::from_parts({1}), xs) == 5);
  CHECK(schur_at_points(Partition::from_parts({1, 1, 1}), xs) == 0);

  // s_(2,1)(1,2,3) = sum_{i != j} x_i^2 x_j + 2 x1 x2 x3
  std::vector<Rational> ys{Rational(1), Rational(2), Rational(3)};
  Rational expect(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) expect += ys[i] * ys[i] * ys[j];
  expect += 2 * ys[0] * ys[1] * ys[2];
  CHECK(schur_at_points(Partition::from_parts({2, 1}), ys) == expect);
}

TEST_CASE("jacobi-trudi agrees with the bialternant") {
  std::vector<Rational> xs{Rational(1, 2), Rational(2), Rational(-1, 3),
                           Rational(5)};
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(schur_jacobi_trudi(lam, xs) == schur_bialt(lam, xs));
}

TEST_CASE("giambelli identity for schur functions") {
  std::vector<Rational> xs{Rational(1, 2), Rational(2), Rational(-1, 3),
                           Rational(3, 7), Rational(4)};
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      FrobeniusCoords fc = lam.frobenius();
      const int d = fc.d();
      std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          m[i][j] =
              schur_at_points(Partition::hook(fc.p[i], fc.q[j]), xs);
      CHECK(schur_at_points(lam, xs) == det(m));
    }
}

TEST_CASE("multiparameter h triangular relations") {
  auto a = ParameterSequence<Rational>{
      [](long i) { return Rational(i, 3); }, 0};
  std::vector<Rational> h{Rational(1), Rational(2), Rational(5), Rational(7)};
  CHECK(multiparam_h(0, a, h) == 1);
  // matching u^{-1} coefficients gives h_{1;a} = h_1
  CHECK(multiparam_h(1, a, h) == h[1]);
  // u^{-2}: h_{1;a} a_1 + h_{2;a} = h_2
  CHECK(multiparam_h(2, a, h) == h[2] - a(1) * h[1]);
  // all a_i = 0 degenerates to the plain h image
  auto zero = ParameterSequence<Rational>::zero();
  for (int k = 0; k <= 3; ++k) CHECK(multiparam_h(k, zero, h) == h[k]);
}

TEST_CASE("multiparameter giambelli identity") {
  auto a = ParameterSequence<Rational>{
      [](long i) { return Rational(2 * i - 5, 7); }, 0};
  std::vector<Rational> h{Rational(1), Rational(1, 2), Rational(-3),
                          Rational(2, 5), Rational(4), Rational(1, 9)};
  Partition mu = Partition::from_parts({2, 2});
  FrobeniusCoords fc = mu.frobenius();
  std::vector<std::vector<Rational>> m(2, std::vector<Rational>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m[i][j] = multiparam_schur(Partition::hook(fc.p[i], fc.q[j]), a, h);
  CHECK(multiparam_schur(mu, a, h) == det(m));
}

TEST_CASE("frobenius-schur values") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      CHECK(frobenius_schur_at(Partition(), lam) == 1);
      CHECK(frobenius_schur_at(Partition::from_parts({1}), lam) ==
            Rational(n));
    }
  CHECK(frobenius_schur_at(Partition::from_parts({1}), Partition()) == 0);
}

TEST_CASE("frobenius-schur agrees with the multiparameter determinant") {
  for (int m = 0; m <= 4; ++m)
    for (const Partition& mu : enumerate_partitions(m))
      for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : enumerate_partitions(n))
          CHECK(frobenius_schur_at(mu, lam) ==
                frobenius_schur_via_det<Rational>(mu, lam));
}

TEST_CASE("power sums on partitions") {
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(power_sum_at_partition(1, lam) == Rational(n));
  CHECK(power_sum_at_partition(2, Partition::from_parts({1})) == 0);
  // (2) has a_1 = 3/2, b_1 = 1/2: p_3 = (3/2)^3 + (1/2)^3 = 7/2
  CHECK(power_sum_at_partition(3, Partition::from_parts({2})) ==
        Rational(7, 2));
}

TEST_CASE("generating series on partitions") {
  CHECK(H_at_partition(Complex(2.0, 1.0), Partition()) == Complex(1.0));
  Partition one = Partition::from_parts({1});
  CHECK(H_at_partition(Rational(3), one) == Rational(7, 2) / Rational(5, 2));
  CHECK_THROWS(H_at_partition(Rational(1, 2), one));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    auto parts = enumerate_partitions(7);
    const Partition& lam = parts[t % parts.size()];
    Complex u(1.0 + 3.0 * unif(rng), 0.5 + 2.0 * unif(rng));
    Complex prod = E_at_partition(-u, lam) * H_at_partition(u, lam);
    CHECK(std::abs(prod - Complex(1.0)) < 1e-12);
  }
}

TEST_CASE("omega points") {
  OmegaPoint flat({}, {}, 1.0);
  CHECK(power_sum_at_omega(1, flat) == doctest::Approx(1.0));
  CHECK(power_sum_at_omega(2, flat) == doctest::Approx(0.0));
  OmegaPoint om({0.3}, {0.1}, 1.0);
  CHECK(power_sum_at_omega(2, om) == doctest::Approx(0.08));
  CHECK_THROWS(OmegaPoint({0.8}, {0.4}, 1.0));  // mass exceeds delta
  CHECK(std::abs(H_at_omega(Complex(10.0), flat) *
                     E_at_omega(Complex(-10.0), flat) -
                 Complex(1.0)) < 1e-12);
}
