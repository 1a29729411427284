#include <doctest.h>

#include "giambelli/ope.hpp"

using namespace giambelli;

namespace {

DiscreteMeasure symmetric3() {
  return DiscreteMeasure({Rational(-1), Rational(0), Rational(1)},
                         {Rational(1), Rational(1), Rational(1)});
}

DiscreteMeasure ladder(int m) {
  std::vector<Rational> atoms, weights;
  for (int i = 1; i <= m; ++i) {
    atoms.push_back(Rational(i));
    weights.push_back(Rational(1, i));
  }
  return DiscreteMeasure(atoms, weights);
}

}  // namespace

TEST_CASE("moments") {
  DiscreteMeasure pm({Rational(-1), Rational(1)}, {Rational(1), Rational(1)});
  CHECK(pm.moment(0) == 2);
  CHECK(pm.moment(3) == 0);
  CHECK(pm.moment(2) == 2);
  CHECK_THROWS(DiscreteMeasure({Rational(1), Rational(1)},
                               {Rational(1), Rational(1)}));
  CHECK_THROWS(DiscreteMeasure({Rational(1)}, {Rational(0)}));
}

TEST_CASE("configuration probabilities") {
  EnsembleSpec spec(symmetric3(), 2);
  CHECK(ensemble_prob({0, 2}, spec) == Rational(2, 3));
  CHECK(ensemble_prob({0, 1}, spec) == Rational(1, 6));
  Rational total(0);
  for (const auto& idx : subsets(3, 2)) total += ensemble_prob(idx, spec);
  CHECK(total == 1);
  // full support is the unique configuration
  EnsembleSpec full(symmetric3(), 3);
  CHECK(ensemble_prob({0, 1, 2}, full) == 1);
}

TEST_CASE("partition function cross-check") {
  for (int N = 1; N <= 4; ++N) {
    EnsembleSpec spec(ladder(5), N);
    CHECK(partition_function(spec) == partition_function_det(spec));
  }
}

TEST_CASE("schur averages") {
  EnsembleSpec spec(symmetric3(), 2);
  CHECK(avg_schur(Partition(), spec) == 1);
  CHECK(avg_schur(Partition::from_parts({1}), spec) == 0);  // odd symmetry
  CHECK(avg_schur(Partition::from_parts({1, 1, 1}), spec) == 0);  // l > N
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(avg_schur(lam, spec) == avg_schur_enum(lam, spec));
}

TEST_CASE("giambelli residuals vanish exactly") {
  DiscreteMeasure a0123({Rational(0), Rational(1), Rational(2), Rational(3)},
                        std::vector<Rational>(4, Rational(1)));
  EnsembleSpec spec(a0123, 3);
  CHECK(giambelli_check_ope(Partition::from_parts({2, 2}), spec) == 0);
  EnsembleSpec big(ladder(6), 4);
  CHECK(giambelli_check_ope(Partition::from_parts({3, 3, 2}), big) == 0);
}

TEST_CASE("orthogonal polynomials") {
  DiscreteMeasure alpha = ladder(5);
  auto p0 = orthopoly(alpha, 0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == 1);
  auto p1 = orthopoly(alpha, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[1] == 1);
  CHECK(p1[0] == -alpha.moment(1) / alpha.moment(0));
  for (int k = 0; k < 5; ++k) CHECK(orthopoly_norm2(alpha, k) > 0);
  CHECK_THROWS(orthopoly(alpha, 5));
}

TEST_CASE("kernels and correlation functions") {
  EnsembleSpec spec(ladder(5), 3);
  // trace of the projection: sum of rho_1 over atoms equals N
  Rational trace(0);
  for (const Rational& a : spec.measure.atoms) {
    Rational r1 = rho_det_cd({a}, spec);
    CHECK(r1 == brute_rho({a}, spec));
    CHECK(r1 == residue_kernel(a, a, spec));
    trace += r1;
  }
  CHECK(trace == 3);
  // N = M: every atom present almost surely
  EnsembleSpec full(ladder(4), 4);
  for (const Rational& a : full.measure.atoms)
    CHECK(rho_det_cd({a}, full) == 1);
  // pair determinants from both kernels match enumeration
  for (const auto& idx : subsets(5, 2)) {
    std::vector<Rational> pts{spec.measure.atoms[idx[0]],
                              spec.measure.atoms[idx[1]]};
    Rational target = brute_rho(pts, spec);
    CHECK(rho_det_cd(pts, spec) == target);
    CHECK(rho_det_residue(pts, spec) == target);
  }
}

TEST_CASE("determinantal identity over the ensemble") {
  EnsembleSpec spec(ladder(5), 3);
  // d = 1 is trivially zero
  CHECK(determinantal_identity_ope({Rational(13, 2)}, {Rational(9, 2)},
                                   spec) == 0);
  CHECK(determinantal_identity_ope({Rational(13, 2), Rational(17, 2)},
                                   {Rational(9, 2), Rational(23, 3)},
                                   spec) == 0);
  CHECK_THROWS(determinantal_identity_ope({Rational(2)}, {Rational(1)},
                                          spec));  // u hits an atom
}
