#include "mignotte/numtheory.hpp"

#include <cmath>
#include <utility>

namespace mignotte {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(errc::invalid_argument, "floor_div by zero");
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m < 1) throw Error(errc::invalid_argument, "mod_floor needs m >= 1");
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw Error(errc::invalid_argument, "log2_big needs x > 0");
  unsigned bits = boost::multiprecision::msb(x);
  if (bits < 63) return std::log2(x.convert_to<double>());
  // Keep 63 significant bits and add the shifted-out exponent back.
  unsigned shift = bits - 62;
  return std::log2((x >> shift).convert_to<double>()) + static_cast<double>(shift);
}

BezoutTriple egcd(const BigInt& a, const BigInt& b) {
  if (a < 0 || b < 0)
    throw Error(errc::invalid_argument, "egcd inputs must be nonnegative");
  if (a == 0 && b == 0)
    throw Error(errc::both_zero, "egcd(0, 0) is undefined");

  BigInt old_r = a, r = b;
  BigInt old_x = 1, x = 0;
  BigInt old_y = 0, y = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
    old_y -= q * y;
    std::swap(old_y, y);
  }
  return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a < 0 ? BigInt(-a) : a;
  BigInt y = b < 0 ? BigInt(-b) : b;
  while (y != 0) {
    x %= y;
    std::swap(x, y);
  }
  return x;
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
  if (m < 2) throw Error(errc::invalid_argument, "mod_inv needs m >= 2");
  if (a < 0) throw Error(errc::invalid_argument, "mod_inv needs a >= 0");
  BezoutTriple bz = egcd(mod_floor(a, m), m);
  if (bz.g != 1)
    throw Error(errc::not_coprime,
                "no inverse of " + a.str() + " mod " + m.str() +
                    ", gcd = " + bz.g.str());
  return mod_floor(bz.x, m);
}

namespace {

void check_congruence(const Congruence& c) {
  if (c.modulus < 1)
    throw Error(errc::invalid_argument, "congruence modulus must be >= 1");
  if (c.residue < 0 || c.residue >= c.modulus)
    throw Error(errc::invalid_argument,
                "congruence residue " + c.residue.str() +
                    " out of [0, " + c.modulus.str() + ")");
}

} // namespace

Congruence crt_pair(const Congruence& c1, const Congruence& c2) {
  check_congruence(c1);
  check_congruence(c2);

  const BigInt& m1 = c1.modulus;
  const BigInt& m2 = c2.modulus;
  BigInt g = gcd(m1, m2);
  BigInt diff = c2.residue - c1.residue;
  if (mod_floor(diff, g) != 0)
    throw Error(errc::inconsistent,
                "residues " + c1.residue.str() + " (mod " + m1.str() + ") and " +
                    c2.residue.str() + " (mod " + m2.str() +
                    ") disagree modulo gcd " + g.str());

  // Solve r1 + m1*t = r2 (mod m2); t is unique modulo m2/g.
  BigInt m2g = m2 / g;
  BigInt t = 0;
  if (m2g > 1) {
    BigInt inv = mod_inv(mod_floor(m1 / g, m2g), m2g);
    t = mod_floor((diff / g) * inv, m2g);
  }
  Congruence out;
  out.modulus = m1 * m2g; // lcm(m1, m2)
  out.residue = c1.residue + m1 * t;
  return out;
}

Congruence crt_combine(std::span<const Congruence> congruences) {
  if (congruences.empty())
    throw Error(errc::invalid_argument, "crt_combine needs a nonempty system");
  Congruence acc = congruences[0];
  check_congruence(acc);
  for (std::size_t i = 1; i < congruences.size(); ++i)
    acc = crt_pair(acc, congruences[i]);
  return acc;
}

} // namespace mignotte
