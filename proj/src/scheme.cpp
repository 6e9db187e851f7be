#include "mignotte/scheme.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mignotte {

MignotteSequence::MignotteSequence(std::vector<BigInt> moduli, int threshold)
    : moduli_(std::move(moduli)), threshold_(threshold) {
  if (moduli_.size() < 2)
    throw Error(errc::invalid_argument, "need at least 2 moduli");
  if (threshold_ < 2 || threshold_ > participants())
    throw Error(errc::invalid_argument,
                "threshold must satisfy 2 <= t <= n, got t = " +
                    std::to_string(threshold_) + ", n = " +
                    std::to_string(participants()));
  for (const BigInt& m : moduli_)
    if (m < 2)
      throw Error(errc::invalid_argument, "modulus " + m.str() + " is < 2");
  std::sort(moduli_.begin(), moduli_.end());
}

SecretBounds bounds(const MignotteSequence& seq) {
  const auto& m = seq.moduli();
  const int n = seq.participants();
  const int t = seq.threshold();
  SecretBounds b{1, 1};
  for (int i = 0; i < t; ++i) b.alpha *= m[i];
  for (int i = n - (t - 1); i < n; ++i) b.beta *= m[i];
  return b;
}

void validate(const MignotteSequence& seq, Validation mode) {
  const auto& m = seq.moduli();
  const int n = seq.participants();

  // Moduli are sorted on construction, so only duplicates can break this.
  for (int i = 1; i < n; ++i)
    if (m[i] <= m[i - 1])
      throw Error(errc::not_increasing,
                  "moduli must be strictly increasing, found " +
                      m[i - 1].str() + " twice");

  auto check_pair = [&](int i, int j) {
    BigInt g = gcd(m[i], m[j]);
    if (g != 1)
      throw Error(errc::not_pairwise_coprime,
                  "moduli (" + m[i].str() + ", " + m[j].str() +
                      ") share factor " + g.str());
  };
  if (mode == Validation::strict) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) check_pair(i, j);
  } else {
    for (int i = 1; i < n; ++i) check_pair(i - 1, i);
  }

  SecretBounds b = bounds(seq);
  if (b.beta >= b.alpha)
    throw Error(errc::not_mignotte,
                "the given input is not a mignotte sequence (beta " +
                    b.beta.str() + " >= alpha " + b.alpha.str() + ")");
}

MignotteSequence generate_sequence(int n, int t, const BigInt& search_floor,
                                   std::uint64_t rng_seed, int window) {
  if (n < 2 || t < 2 || t > n)
    throw Error(errc::invalid_argument, "need 2 <= t <= n");
  if (search_floor < 2)
    throw Error(errc::invalid_argument, "search_floor must be >= 2");
  if (window < 1)
    throw Error(errc::invalid_argument, "window must be >= 1");

  std::mt19937_64 rng(rng_seed);
  std::vector<BigInt> kept;

  BigInt next = search_floor;
  bool low_start = search_floor <= 2; // admit the lone even prime
  if (!low_start && next % 2 == 0) ++next;

  auto advance = [&]() {
    if (low_start) {
      // 2, 3, then the odd ascent
      if (next == 2) { next = 3; return; }
      if (next == 3) { next = 5; return; }
      low_start = false;
    }
    next += 2 + 2 * static_cast<int>(rng() % 2);
  };

  for (int examined = 0; examined < window; ++examined) {
    BigInt c = next;
    advance();

    bool coprime_to_all = true;
    for (const BigInt& k : kept)
      if (gcd(c, k) != 1) { coprime_to_all = false; break; }
    if (!coprime_to_all) continue;

    kept.push_back(c);
    if (static_cast<int>(kept.size()) < n) continue;

    MignotteSequence candidate(kept, t);
    SecretBounds b = bounds(candidate);
    if (b.beta < b.alpha) return candidate;
    // Window too sparse; shifting it upward shrinks beta/alpha.
    kept.erase(kept.begin());
  }
  throw Error(errc::search_exhausted,
              "no valid sequence within " + std::to_string(window) +
                  " candidates above " + search_floor.str());
}

std::vector<Share> deal(const MignotteSequence& seq, const BigInt& secret) {
  SecretBounds b = bounds(seq);
  if (!b.contains(secret))
    throw Error(errc::secret_out_of_range,
                "invalid secret " + secret.str() + ", need " + b.beta.str() +
                    " < S < " + b.alpha.str());
  std::vector<Share> shares;
  shares.reserve(seq.moduli().size());
  int id = 0;
  for (const BigInt& m : seq.moduli()) {
    shares.push_back({id++, secret % m, m});
  }
  return shares;
}

BigInt reconstruct(std::span<const Share> shares, const MignotteSequence& seq) {
  if (static_cast<int>(shares.size()) < seq.threshold())
    throw Error(errc::insufficient_shares,
                "got " + std::to_string(shares.size()) + " shares, need " +
                    std::to_string(seq.threshold()));

  std::set<int> seen;
  std::vector<Congruence> system;
  system.reserve(shares.size());
  for (const Share& s : shares) {
    if (s.participant_id < 0 || s.participant_id >= seq.participants())
      throw Error(errc::invalid_argument,
                  "participant id " + std::to_string(s.participant_id) +
                      " out of range");
    if (!seen.insert(s.participant_id).second)
      throw Error(errc::invalid_argument,
                  "duplicate share for participant " +
                      std::to_string(s.participant_id));
    if (s.modulus != seq.moduli()[s.participant_id])
      throw Error(errc::invalid_argument,
                  "share modulus " + s.modulus.str() +
                      " does not match the sequence at id " +
                      std::to_string(s.participant_id));
    system.push_back({s.value, s.modulus});
  }

  Congruence combined = crt_combine(system);
  SecretBounds b = bounds(seq);
  if (!b.contains(combined.residue))
    throw Error(errc::candidate_out_of_range,
                "CRT candidate " + combined.residue.str() + " lies outside (" +
                    b.beta.str() + ", " + b.alpha.str() +
                    "); shares tampered or mismatched");
  return combined.residue;
}

InformationRate information_rate(const MignotteSequence& seq) {
  SecretBounds b = bounds(seq);
  InformationRate rate;
  rate.secret_space = b.alpha - b.beta - 1;
  if (rate.secret_space <= 1)
    throw Error(errc::degenerate_range,
                "secret space has " + rate.secret_space.str() +
                    " elements, ratios undefined");
  double log_space = log2_big(rate.secret_space);
  rate.per_participant.reserve(seq.moduli().size());
  for (const BigInt& m : seq.moduli())
    rate.per_participant.push_back(log2_big(m) / log_space);
  auto [lo, hi] = std::minmax_element(rate.per_participant.begin(),
                                      rate.per_participant.end());
  rate.min_ratio = *lo;
  rate.max_ratio = *hi;
  return rate;
}

} // namespace mignotte
