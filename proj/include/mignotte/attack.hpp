#pragma once

#include <span>
#include <vector>

#include "mignotte/scheme.hpp"

namespace mignotte {

// A coalition's pooled knowledge: one congruence per participant, kept in
// selection order. Participant ids must be distinct.
class CongruenceSystem {
 public:
  struct Entry {
    int participant_id;
    Congruence congruence;
  };

  CongruenceSystem() = default;

  void add(int participant_id, Congruence congruence);

  static CongruenceSystem from_shares(std::span<const Share> shares);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

// What the attacker asserts about the secret besides the coalition's
// congruences. `range` is the informed attacker using the public bounds;
// `positive` only assumes S > 0 and caps the enumeration at `limit`
// candidates, reproducing the original under-threshold query.
struct SearchMode {
  enum class Kind { positive, range };

  Kind kind = Kind::positive;
  SecretBounds bounds{}; // range only
  int limit = 5;         // positive only

  static SearchMode positive(int limit = 5) {
    SearchMode m;
    m.kind = Kind::positive;
    m.limit = limit;
    return m;
  }
  static SearchMode range(SecretBounds b) {
    SearchMode m;
    m.kind = Kind::range;
    m.bounds = std::move(b);
    return m;
  }
};

// Outcome of one under-threshold attack. Candidates ascend with common
// difference combined.modulus; unique means the coalition pinned the secret.
struct AttackReport {
  Congruence combined;
  SearchMode mode;
  std::vector<BigInt> candidates;
  BigInt count = 0;
  double residual_entropy_bits = 0.0; // log2(count), 0 when count = 0
  bool unique = false;
};

// One row of a security audit: which coalition, how many candidates it
// cannot tell apart.
struct CoalitionOutcome {
  std::vector<int> ids;
  BigInt count;
};

struct AuditReport {
  int coalition_size = 0;
  std::vector<CoalitionOutcome> coalitions; // lexicographic by ids
  BigInt min_count = 0;
  BigInt max_count = 0;
  double mean_count = 0.0;
};

// Conjoins the coalition's congruences into a single one modulo the lcm of
// its moduli. Throws Error(inconsistent) when no integer satisfies them all
// (forged shares).
Congruence combine(const CongruenceSystem& system);

// Every secret the coalition cannot rule out, ascending. Range mode returns
// all candidates strictly inside (beta, alpha); positive mode returns the
// first `limit` positive candidates.
std::vector<BigInt> enumerate_candidates(const CongruenceSystem& system,
                                         const SearchMode& mode);

// Closed-form size of the range-mode candidate set, no enumeration.
BigInt candidate_count(const Congruence& combined, const SecretBounds& bounds);

AttackReport attack_report(const CongruenceSystem& system,
                           const SearchMode& mode);

// Deals the secret internally and measures every size-s coalition against
// the public bounds. Exact subset enumeration, so n is capped at 20.
AuditReport security_audit(const MignotteSequence& seq, const BigInt& secret,
                           int coalition_size);

} // namespace mignotte
