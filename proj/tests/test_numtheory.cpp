#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "mignotte/numtheory.hpp"
#include "oracles.hpp"

using namespace mignotte;

TEST_CASE("floor_div and mod_floor handle signs") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
  CHECK(mod_floor(-1, 5) == 4);
  CHECK(mod_floor(10, 5) == 0);
  CHECK(mod_floor(-109, 1683) == 1574);
  CHECK_THROWS_AS(floor_div(1, 0), Error);
}

TEST_CASE("log2_big matches std::log2 on small inputs and scales up") {
  CHECK(log2_big(1) == doctest::Approx(0.0));
  CHECK(log2_big(471) == doctest::Approx(std::log2(471.0)).epsilon(1e-12));
  BigInt huge = BigInt(1) << 300;
  CHECK(log2_big(huge) == doctest::Approx(300.0).epsilon(1e-12));
  CHECK_THROWS_AS(log2_big(0), Error);
}

TEST_CASE("egcd returns a valid Bezout triple") {
  auto t = egcd(7, 9);
  CHECK(t.g == 1);
  CHECK(BigInt(7) * t.x + BigInt(9) * t.y == 1);

  t = egcd(0, 5);
  CHECK(t.g == 5);
  CHECK(t.x == 0);
  CHECK(t.y == 1);

  t = egcd(12, 18);
  CHECK(t.g == 6);
  CHECK(BigInt(12) * t.x + BigInt(18) * t.y == 6);
}

TEST_CASE("egcd rejects the all-zero input") {
  CHECK_THROWS_AS(egcd(0, 0), Error);
  try {
    egcd(0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == errc::both_zero);
  }
}

TEST_CASE("egcd identity holds on random inputs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    BigInt a = rng() % 1000000;
    BigInt b = rng() % 1000000;
    if (a == 0 && b == 0) continue;
    auto t = egcd(a, b);
    CHECK(t.g > 0);
    CHECK(a * t.x + b * t.y == t.g);
    CHECK(a % t.g == 0);
    CHECK(b % t.g == 0);
    CHECK(t.g == oracle::gcd_ref(a, b));
  }
}

TEST_CASE("mod_inv computes the least positive inverse") {
  CHECK(mod_inv(9, 11) == 5);
  for (int m : {2, 3, 17, 693, 45045}) CHECK(mod_inv(1, m) == 1);
  CHECK_THROWS_AS(mod_inv(6, 9), Error);
  try {
    mod_inv(6, 9);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_coprime);
  }
  CHECK_THROWS_AS(mod_inv(5, 1), Error); // m >= 2 required
}

TEST_CASE("mod_inv inverts random coprime pairs") {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 300) {
    BigInt m = 2 + rng() % 999998;
    BigInt a = rng() % m;
    if (oracle::gcd_ref(a, m) != 1) continue;
    BigInt v = mod_inv(a, m);
    CHECK(v >= 0);
    CHECK(v < m);
    CHECK(a * v % m == 1);
    ++done;
  }
}

TEST_CASE("crt_pair on the two-share coalition") {
  Congruence c = crt_pair({6, 9}, {0, 11});
  CHECK(c.residue == 33);
  CHECK(c.modulus == 99);
}

TEST_CASE("crt_pair is idempotent") {
  Congruence c = crt_pair({4, 15}, {4, 15});
  CHECK(c.residue == 4);
  CHECK(c.modulus == 15);
}

TEST_CASE("crt_pair handles non-coprime moduli") {
  Congruence c = crt_pair({1, 4}, {3, 6});
  CHECK(c.residue == 9);
  CHECK(c.modulus == 12);
  CHECK_THROWS_AS(crt_pair({0, 4}, {1, 6}), Error);
  try {
    crt_pair({0, 4}, {1, 6});
  } catch (const Error& e) {
    CHECK(e.code() == errc::inconsistent);
  }
}

TEST_CASE("crt_pair rejects malformed congruences") {
  CHECK_THROWS_AS(crt_pair({5, 4}, {0, 3}), Error); // residue >= modulus
  CHECK_THROWS_AS(crt_pair({0, 0}, {0, 3}), Error); // modulus < 1
}

TEST_CASE("crt_combine reproduces the three-share solution") {
  std::vector<Congruence> cs{{6, 9}, {0, 11}, {7, 17}};
  Congruence c = crt_combine(cs);
  CHECK(c.residue == 330);
  CHECK(c.modulus == 1683);
}

TEST_CASE("crt_combine singleton and empty") {
  std::vector<Congruence> one{{3, 8}};
  Congruence c = crt_combine(one);
  CHECK(c.residue == 3);
  CHECK(c.modulus == 8);
  std::vector<Congruence> none;
  CHECK_THROWS_AS(crt_combine(none), Error);
}

TEST_CASE("crt_combine solves the five-share non-coprime system") {
  std::vector<Congruence> cs{{2, 7}, {0, 9}, {10, 11}, {8, 13}, {0, 15}};
  Congruence c = crt_combine(cs);
  CHECK(c.residue == 450);
  CHECK(c.modulus == 45045);
}

TEST_CASE("crt_pair result is independent of argument order") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    BigInt m1 = 1 + rng() % 400;
    BigInt m2 = 1 + rng() % 400;
    Congruence a{BigInt(rng()) % m1, m1};
    Congruence b{BigInt(rng()) % m2, m2};
    bool threw_ab = false, threw_ba = false;
    Congruence ab, ba;
    try { ab = crt_pair(a, b); } catch (const Error&) { threw_ab = true; }
    try { ba = crt_pair(b, a); } catch (const Error&) { threw_ba = true; }
    REQUIRE(threw_ab == threw_ba);
    if (!threw_ab) {
      CHECK(ab.residue == ba.residue);
      CHECK(ab.modulus == ba.modulus);
    }
  }
}

TEST_CASE("crt_combine agrees with the brute-force oracle") {
  std::mt19937_64 rng(42);
  int consistent_seen = 0, inconsistent_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Congruence> cs;
    std::vector<oracle::Cong> ref;
    BigInt lcm = 1;
    for (int i = 0; i < k; ++i) {
      BigInt m = 2 + rng() % 58;
      BigInt r = BigInt(rng()) % m;
      lcm = oracle::lcm_ref(lcm, m);
      cs.push_back({r, m});
      ref.push_back({r, m});
    }
    if (lcm > 1000000) continue;

    auto expected = oracle::brute_crt(ref);
    if (!expected) {
      ++inconsistent_seen;
      CHECK_THROWS_AS(crt_combine(cs), Error);
      continue;
    }
    ++consistent_seen;
    Congruence got = crt_combine(cs);
    CHECK(got.residue == expected->first);
    CHECK(got.modulus == expected->second);
    for (const Congruence& c : cs) CHECK(got.residue % c.modulus == c.residue);
    CHECK(got.residue >= 0);
    CHECK(got.residue < got.modulus);
  }
  // The generator must exercise both outcomes.
  CHECK(consistent_seen > 50);
  CHECK(inconsistent_seen > 50);
}
