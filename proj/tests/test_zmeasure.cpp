#include <doctest.h>

#include "giambelli/zmeasure.hpp"

using namespace giambelli;

TEST_CASE("parameter admissibility") {
  CHECK_THROWS(ZParams::parse("1", "1"));       // integer z
  CHECK_THROWS(ZParams::parse("1/2", "3/2"));   // different integer gaps
  CHECK_THROWS(ZParams::parse("1/2", "-1/2"));  // zz' < 0
  CHECK_THROWS(ZParams::parse("0.5+1i", "0.5+2i"));  // not conjugate
  CHECK(ZParams::parse("1/3", "2/3").exact);
  CHECK(ZParams::parse("0.5+1i", "0.5-1i").principal);
  CHECK(ZParams::parse("-2/3", "-1/3").zzp() > 0);
  CHECK_THROWS(MixedZParams::parse("1/2", "1/2", "0"));
  CHECK_THROWS(MixedZParams::parse("1/2", "1/2", "1"));
}

TEST_CASE("fixed-size measure weights") {
  ZParams zp = ZParams::parse("1/2", "1/2");
  CHECK(weight_n_exact(Partition(), zp) == 1);
  CHECK(weight_n_exact(Partition::from_parts({1}), zp) == 1);
  CHECK(weight_n_exact(Partition::from_parts({2}), zp) == Rational(9, 10));
  CHECK(weight_n_exact(Partition::from_parts({1, 1}), zp) == Rational(1, 10));
}

TEST_CASE("measure normalization") {
  for (const char* pair : {"1/2", "2/3"}) {
    ZParams zp = pair == std::string("1/2") ? ZParams::parse("1/2", "1/2")
                                            : ZParams::parse("1/3", "2/3");
    for (int n = 0; n <= 8; ++n) {
      Rational total(0);
      for (const Partition& lam : enumerate_partitions(n))
        total += weight_n_exact(lam, zp);
      CHECK(total == 1);
    }
  }
  ZParams pr = ZParams::parse("0.5+1i", "0.5-1i");
  for (int n = 0; n <= 6; ++n) {
    double total = 0;
    for (const Partition& lam : enumerate_partitions(n))
      total += weight_n(lam, pr);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("mixed measure") {
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  double empty = weight_mixed(Partition(), mp);
  CHECK(empty == doctest::Approx(std::pow(0.75, 0.25)).epsilon(1e-14));
  CHECK(weight_mixed_ratio_exact(Partition::from_parts({1}), mp) ==
        Rational(1, 16));
  CHECK(weight_mixed(Partition::from_parts({1}), mp) ==
        doctest::Approx(empty / 16).epsilon(1e-13));
}

TEST_CASE("closed-form expectations") {
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  CHECK(expect_fs_exact(Partition(), mp) == 1);
  CHECK(expect_fs_exact(Partition::from_parts({1}), mp) == Rational(1, 12));
  CHECK(expect_fs_exact(Partition::from_parts({2}), mp) == Rational(1, 32));
}

TEST_CASE("averaged giambelli residual vanishes") {
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/4");
  CHECK(giambelli_expectation_check_exact(Partition::from_parts({2, 2}), mp) ==
        0);
  CHECK(giambelli_expectation_check_exact(Partition::from_parts({3, 1, 1}),
                                          mp) == 0);
}

TEST_CASE("growth chain transition probabilities") {
  ZParams zp = ZParams::parse("1/2", "1/2");
  CHECK(transition_prob_exact(Partition(), Partition::from_parts({1}), zp) ==
        1);
  CHECK(transition_prob_exact(Partition::from_parts({1}),
                              Partition::from_parts({2}), zp) ==
        Rational(9, 10));
  CHECK(transition_prob_exact(Partition::from_parts({1}),
                              Partition::from_parts({1, 1}), zp) ==
        Rational(1, 10));
  // rows sum to one
  for (int n = 0; n <= 7; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      Rational total(0);
      for (const auto& [lam, c] : mu.successors())
        total += transition_prob_exact(mu, lam, zp);
      CHECK(total == 1);
    }
}

TEST_CASE("harmonicity of the weight per path") {
  ZParams zp = ZParams::parse("1/3", "2/3");
  for (int n = 0; n <= 7; ++n)
    for (const Partition& mu : enumerate_partitions(n)) {
      Rational phi = weight_n_exact(mu, zp) / Rational(mu.dim_hook());
      Rational acc(0);
      for (const auto& [lam, c] : mu.successors())
        acc += weight_n_exact(lam, zp) / Rational(lam.dim_hook());
      CHECK(phi == acc);
    }
}

TEST_CASE("sampling is deterministic per (seed, index)") {
  MixedZParams mp = MixedZParams::parse("1/2", "1/2", "1/2");
  std::mt19937_64 r1 = substream(42, 3);
  std::mt19937_64 r2 = substream(42, 3);
  CHECK(sample_mixed(mp, r1) == sample_mixed(mp, r2));
  std::mt19937_64 r3 = substream(42, 4);
  Partition a = sample_mixed(mp, r3);
  CHECK(a.size() >= 0);
}
