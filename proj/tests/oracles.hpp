#pragma once

// Brute-force reference computations for the property tests. Everything in
// here is deliberately independent of the library's number theory: plain
// loops over cpp_int, no egcd, no CRT.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mignotte/bigint.hpp"

namespace oracle {

using mignotte::BigInt;

struct Cong {
  BigInt r;
  BigInt m;
};

inline BigInt gcd_ref(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline BigInt lcm_ref(const BigInt& a, const BigInt& b) {
  return a / gcd_ref(a, b) * b;
}

// Scans [0, lcm) for the least simultaneous solution. Caller keeps the lcm
// small enough to scan.
inline std::optional<std::pair<BigInt, BigInt>> brute_crt(
    const std::vector<Cong>& cs) {
  BigInt lcm = 1;
  for (const Cong& c : cs) lcm = lcm_ref(lcm, c.m);
  for (BigInt x = 0; x < lcm; ++x) {
    bool ok = true;
    for (const Cong& c : cs)
      if (x % c.m != c.r) { ok = false; break; }
    if (ok) return std::make_pair(x, lcm);
  }
  return std::nullopt;
}

// All values strictly inside (lo, hi) satisfying every congruence.
inline std::vector<BigInt> brute_candidates(const std::vector<Cong>& cs,
                                            const BigInt& lo,
                                            const BigInt& hi) {
  std::vector<BigInt> out;
  for (BigInt x = lo + 1; x < hi; ++x) {
    bool ok = true;
    for (const Cong& c : cs)
      if (x % c.m != c.r) { ok = false; break; }
    if (ok) out.push_back(x);
  }
  return out;
}

// Uniform-ish draw from [lo, hi]; test-grade, 128 bits of entropy.
inline BigInt rand_in(std::mt19937_64& rng, const BigInt& lo,
                      const BigInt& hi) {
  BigInt span = hi - lo + 1;
  BigInt acc = rng();
  acc = (acc << 64) | BigInt(rng());
  return lo + acc % span;
}

} // namespace oracle
