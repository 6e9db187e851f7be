#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mignotte {

enum class errc {
  invalid_argument,
  both_zero,
  not_coprime,
  inconsistent,
  not_increasing,
  not_pairwise_coprime,
  not_mignotte,
  search_exhausted,
  secret_out_of_range,
  insufficient_shares,
  candidate_out_of_range,
  degenerate_range,
  cap_exceeded,
  empty_system,
  malformed_output,
  solver_unavailable,
  solver_error,
  solver_timeout,
  io_error,
};

constexpr std::string_view errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument:       return "InvalidArgument";
    case errc::both_zero:              return "BothZero";
    case errc::not_coprime:            return "NotCoprime";
    case errc::inconsistent:           return "Inconsistent";
    case errc::not_increasing:         return "NotIncreasing";
    case errc::not_pairwise_coprime:   return "NotPairwiseCoprime";
    case errc::not_mignotte:           return "NotMignotte";
    case errc::search_exhausted:       return "SearchExhausted";
    case errc::secret_out_of_range:    return "SecretOutOfRange";
    case errc::insufficient_shares:    return "InsufficientShares";
    case errc::candidate_out_of_range: return "CandidateOutOfRange";
    case errc::degenerate_range:       return "DegenerateRange";
    case errc::cap_exceeded:           return "CapExceeded";
    case errc::empty_system:           return "EmptySystem";
    case errc::malformed_output:       return "MalformedOutput";
    case errc::solver_unavailable:     return "SolverUnavailable";
    case errc::solver_error:           return "SolverError";
    case errc::solver_timeout:         return "SolverTimeout";
    case errc::io_error:               return "IoError";
  }
  return "UnknownError";
}

// Domain error carrying a stable code. The what() text always starts with
// the code name so CLI messages name the rule that was violated.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

} // namespace mignotte
