#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mignotte/numtheory.hpp"

namespace mignotte {

// Coprimality checking mode. Strict checks every pair of moduli. Lax checks
// adjacent pairs only, which admits sequences such as (7, 9, 11, 13, 15)
// where gcd(9, 15) = 3.
enum class Validation { strict, lax };

// Public parameter set of the scheme: n pairwise-coprime moduli held in
// ascending order, plus the reconstruction threshold t.
//
// The constructor sorts the supplied moduli and checks shape only (n >= 2,
// each modulus >= 2, 2 <= t <= n). Coprimality, strictness of the ordering
// (duplicates) and the beta < alpha condition are checked by validate().
class MignotteSequence {
 public:
  MignotteSequence(std::vector<BigInt> moduli, int threshold);

  const std::vector<BigInt>& moduli() const { return moduli_; }
  int threshold() const { return threshold_; }
  int participants() const { return static_cast<int>(moduli_.size()); }

 private:
  std::vector<BigInt> moduli_;
  int threshold_;
};

// Public interval for valid secrets: beta < S < alpha, strict on both ends.
// alpha is the product of the t smallest moduli, beta the product of the
// t-1 largest. Any t shares pin the secret uniquely; any t-1 leave at least
// alpha - beta candidates modulo the coalition lcm.
struct SecretBounds {
  BigInt beta;
  BigInt alpha;

  bool contains(const BigInt& s) const { return s > beta && s < alpha; }
};

// One participant's share: the secret reduced modulo their modulus.
struct Share {
  int participant_id = 0; // 0-based, indexes the sequence's moduli
  BigInt value;
  BigInt modulus;
};

// Per-participant share-to-secret size ratios. A scheme is ideal when the
// ratio is 1; Mignotte's scheme always sits below that.
struct InformationRate {
  BigInt secret_space; // number of integers strictly between beta and alpha
  std::vector<double> per_participant;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

inline constexpr double ideal_information_rate = 1.0;

SecretBounds bounds(const MignotteSequence& seq);

// Full validity check. Throws Error with code not_increasing,
// not_pairwise_coprime (message names the offending pair) or not_mignotte.
void validate(const MignotteSequence& seq, Validation mode);

// Deterministic search for a strict-valid sequence: odd candidates are
// scanned upward from search_floor with seeded skips, keeping each one that
// is coprime to everything kept so far. When n are held but beta >= alpha,
// the smallest is dropped and the scan continues. Gives up with
// Error(search_exhausted) after `window` candidates have been examined.
MignotteSequence generate_sequence(int n, int t, const BigInt& search_floor,
                                   std::uint64_t rng_seed,
                                   int window = 100000);

// Computes all n shares of the secret. The sequence is assumed validated by
// the caller (in whichever mode); the secret range is enforced here.
// Throws Error(secret_out_of_range) unless beta < secret < alpha.
std::vector<Share> deal(const MignotteSequence& seq, const BigInt& secret);

// Legitimate reconstruction from at least t shares. CRT-combines the shares
// and returns the least residue, which must land inside (beta, alpha);
// anything else means tampered or mismatched shares.
BigInt reconstruct(std::span<const Share> shares, const MignotteSequence& seq);

// Leakage metric: per participant i, ratio_i = log2(m_i) / log2(|X|) with
// |X| = alpha - beta - 1. Throws Error(degenerate_range) when |X| <= 1.
InformationRate information_rate(const MignotteSequence& seq);

} // namespace mignotte
