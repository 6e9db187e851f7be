#pragma once

#include <span>
#include <vector>

#include "mignotte/bigint.hpp"
#include "mignotte/error.hpp"

namespace mignotte {

// One residue constraint: value is congruent to `residue` modulo `modulus`.
// Invariants: modulus >= 1 and 0 <= residue < modulus.
struct Congruence {
  BigInt residue;
  BigInt modulus;

  bool operator==(const Congruence&) const = default;
};

// Result of the extended Euclidean algorithm on inputs (a, b):
// a*x + b*y = g with g = gcd(a, b). The pair (x, y) is not normalized;
// only the identity is guaranteed.
struct BezoutTriple {
  BigInt g;
  BigInt x;
  BigInt y;
};

// Floor division, b != 0. cpp_int's operator/ truncates toward zero.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Least nonnegative residue of a modulo m, m >= 1.
BigInt mod_floor(const BigInt& a, const BigInt& m);

// log2 of a positive integer of any size, as a double.
double log2_big(const BigInt& x);

// Extended Euclid on nonnegative inputs, not both zero.
// Throws Error(both_zero) when a = b = 0.
BezoutTriple egcd(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);

// Modular inverse of a modulo m (m >= 2): returns v in [0, m) with
// a*v = 1 (mod m). Throws Error(not_coprime) when gcd(a, m) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& m);

// General CRT for two congruences, tolerating non-coprime moduli.
// Returns the unique congruence modulo lcm(m1, m2) implied by both inputs.
// Throws Error(inconsistent) when r1 != r2 (mod gcd(m1, m2)).
Congruence crt_pair(const Congruence& c1, const Congruence& c2);

// Left fold of crt_pair over a nonempty system. The result residue is the
// unique solution of the whole system in [0, lcm of all moduli).
Congruence crt_combine(std::span<const Congruence> congruences);

} // namespace mignotte
