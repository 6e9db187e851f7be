#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mignotte/attack.hpp"

namespace mignotte {

// The attack phrased as an SMT-LIB2 query. The secret variable is S and the
// coalition's share variables are I0, I1, ... in selection order; every
// coalition entry contributes the two assertions (= Ii (mod S pi)) and
// (= Ii si).
struct SmtQuery {
  std::vector<std::string> variables;  // S first, then I0..I{k-1}
  std::vector<std::string> assertions; // full "(assert ...)" lines in order
  CongruenceSystem system;

  // Complete script: header, declarations, assertions, check-sat/get-model.
  // Deterministic and byte-stable; every line ends with a single newline.
  std::string to_script() const;
};

enum class SolverStatus { sat, unsat, unknown, malformed };

struct SolverOutcome {
  SolverStatus status = SolverStatus::malformed;
  std::optional<BigInt> model_value; // value bound to S, present iff sat
};

struct DriveOptions {
  std::string solver_command;    // shell command, script arrives on stdin
  double timeout_seconds = 10.0; // per solver call
};

SmtQuery build_query(const CongruenceSystem& system, const SearchMode& mode);

// Throws Error(empty_system) on an empty coalition.
std::string emit_script(const CongruenceSystem& system, const SearchMode& mode);

// The model-blocking line excluding one found secret, without a trailing
// newline: (assert (distinct S <value>)). Blocking S alone suffices since
// the share variables are functions of S.
std::string blocking_clause(const BigInt& value);

// Reads a solver's answer stream. With several check-sat answers present,
// the last one wins; the S binding is taken from the model that follows it.
// Produces status malformed when no status line is found or a sat answer
// carries no parseable S value.
SolverOutcome parse_outcome(std::string_view solver_output);

// Model enumeration against an external solver: run, parse, block, repeat
// until unsat or `limit` models. Candidates come back sorted ascending no
// matter the solver's emission order. Throws Error(solver_unavailable),
// Error(solver_error) or Error(solver_timeout).
std::vector<BigInt> drive_script(const std::string& script, int limit,
                                 const DriveOptions& options);

std::vector<BigInt> drive_solver(const CongruenceSystem& system,
                                 const SearchMode& mode, int limit,
                                 const DriveOptions& options);

} // namespace mignotte
