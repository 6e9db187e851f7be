#include "mignotte/attack.hpp"

#include <algorithm>

namespace mignotte {

void CongruenceSystem::add(int participant_id, Congruence congruence) {
  if (congruence.modulus < 1 || congruence.residue < 0 ||
      congruence.residue >= congruence.modulus)
    throw Error(errc::invalid_argument,
                "congruence " + congruence.residue.str() + " mod " +
                    congruence.modulus.str() + " is malformed");
  for (const Entry& e : entries_)
    if (e.participant_id == participant_id)
      throw Error(errc::invalid_argument,
                  "participant " + std::to_string(participant_id) +
                      " already present in the system");
  entries_.push_back({participant_id, std::move(congruence)});
}

CongruenceSystem CongruenceSystem::from_shares(std::span<const Share> shares) {
  CongruenceSystem sys;
  for (const Share& s : shares) sys.add(s.participant_id, {s.value, s.modulus});
  return sys;
}

Congruence combine(const CongruenceSystem& system) {
  if (system.empty())
    throw Error(errc::empty_system, "cannot combine an empty coalition");
  std::vector<Congruence> cs;
  cs.reserve(system.size());
  for (const auto& e : system.entries()) cs.push_back(e.congruence);
  return crt_combine(cs);
}

namespace {

void check_mode(const SearchMode& mode) {
  if (mode.kind == SearchMode::Kind::range) {
    if (mode.bounds.beta >= mode.bounds.alpha)
      throw Error(errc::invalid_argument,
                  "range mode needs beta < alpha, got (" +
                      mode.bounds.beta.str() + ", " + mode.bounds.alpha.str() +
                      ")");
  } else if (mode.limit < 1) {
    throw Error(errc::invalid_argument, "positive mode needs limit >= 1");
  }
}

std::vector<BigInt> candidates_of(const Congruence& combined,
                                  const SearchMode& mode) {
  const BigInt& x = combined.residue;
  const BigInt& step = combined.modulus;
  std::vector<BigInt> out;
  if (mode.kind == SearchMode::Kind::range) {
    // Least candidate above beta, then stride by the combined modulus.
    BigInt lo = mode.bounds.beta + 1;
    for (BigInt c = lo + mod_floor(x - lo, step); c < mode.bounds.alpha;
         c += step)
      out.push_back(c);
  } else {
    BigInt c = x == 0 ? step : x; // least strictly positive candidate
    for (int i = 0; i < mode.limit; ++i, c += step) out.push_back(c);
  }
  return out;
}

} // namespace

std::vector<BigInt> enumerate_candidates(const CongruenceSystem& system,
                                         const SearchMode& mode) {
  check_mode(mode);
  return candidates_of(combine(system), mode);
}

BigInt candidate_count(const Congruence& combined, const SecretBounds& bounds) {
  if (bounds.beta >= bounds.alpha)
    throw Error(errc::invalid_argument, "candidate_count needs beta < alpha");
  const BigInt& x = combined.residue;
  const BigInt& m = combined.modulus;
  // Count of c = x (mod m) with beta < c < alpha, open on both ends.
  return floor_div(bounds.alpha - 1 - x, m) - floor_div(bounds.beta - x, m);
}

AttackReport attack_report(const CongruenceSystem& system,
                           const SearchMode& mode) {
  check_mode(mode);
  AttackReport report;
  report.combined = combine(system);
  report.mode = mode;
  report.candidates = candidates_of(report.combined, mode);
  report.count = static_cast<BigInt>(report.candidates.size());
  report.residual_entropy_bits =
      report.count >= 1 ? log2_big(report.count) : 0.0;
  report.unique = report.count == 1;
  return report;
}

AuditReport security_audit(const MignotteSequence& seq, const BigInt& secret,
                           int coalition_size) {
  const int n = seq.participants();
  if (n > 20)
    throw Error(errc::cap_exceeded,
                "audit enumerates all subsets; n = " + std::to_string(n) +
                    " exceeds the cap of 20");
  if (coalition_size < 1 || coalition_size > n)
    throw Error(errc::invalid_argument,
                "coalition size must be in [1, n], got " +
                    std::to_string(coalition_size));

  SecretBounds b = bounds(seq);
  std::vector<Share> shares = deal(seq, secret);

  AuditReport report;
  report.coalition_size = coalition_size;

  // Walk subsets in lexicographic id order.
  std::vector<int> ids(coalition_size);
  for (int i = 0; i < coalition_size; ++i) ids[i] = i;
  BigInt total = 0;
  while (true) {
    CongruenceSystem sys;
    for (int id : ids) sys.add(id, {shares[id].value, shares[id].modulus});
    BigInt cnt = candidate_count(combine(sys), b);
    total += cnt;
    report.coalitions.push_back({ids, cnt});

    int k = coalition_size - 1;
    while (k >= 0 && ids[k] == n - coalition_size + k) --k;
    if (k < 0) break;
    ++ids[k];
    for (int j = k + 1; j < coalition_size; ++j) ids[j] = ids[j - 1] + 1;
  }

  auto [lo, hi] = std::minmax_element(
      report.coalitions.begin(), report.coalitions.end(),
      [](const CoalitionOutcome& a, const CoalitionOutcome& c) {
        return a.count < c.count;
      });
  report.min_count = lo->count;
  report.max_count = hi->count;
  report.mean_count = total.convert_to<double>() /
                      static_cast<double>(report.coalitions.size());
  return report;
}

} // namespace mignotte
