#include "mignotte/smtbridge.hpp"

#include <algorithm>
#include <cctype>

#include "mignotte/subprocess.hpp"

namespace mignotte {

std::string SmtQuery::to_script() const {
  std::string s = "(set-logic ALL)\n";
  for (const std::string& v : variables)
    s += "(declare-const " + v + " Int)\n";
  for (const std::string& a : assertions) s += a + "\n";
  s += "(check-sat)\n(get-model)\n";
  return s;
}

SmtQuery build_query(const CongruenceSystem& system, const SearchMode& mode) {
  if (system.empty())
    throw Error(errc::empty_system, "no congruences to emit");

  SmtQuery q;
  q.system = system;
  q.variables.push_back("S");
  for (std::size_t i = 0; i < system.size(); ++i)
    q.variables.push_back("I" + std::to_string(i));

  if (mode.kind == SearchMode::Kind::range) {
    if (mode.bounds.beta >= mode.bounds.alpha)
      throw Error(errc::invalid_argument, "range mode needs beta < alpha");
    q.assertions.push_back("(assert (and (> S " + mode.bounds.beta.str() +
                           ") (< S " + mode.bounds.alpha.str() + ")))");
  } else {
    q.assertions.push_back("(assert (> S 0))");
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Congruence& c = system.entries()[i].congruence;
    std::string var = "I" + std::to_string(i);
    q.assertions.push_back("(assert (= " + var + " (mod S " +
                           c.modulus.str() + ")))");
    q.assertions.push_back("(assert (= " + var + " " + c.residue.str() + "))");
  }
  return q;
}

std::string emit_script(const CongruenceSystem& system,
                        const SearchMode& mode) {
  return build_query(system, mode).to_script();
}

std::string blocking_clause(const BigInt& value) {
  return "(assert (distinct S " + value.str() + "))";
}

namespace {

// Splits into words and lone parentheses; everything else is whitespace.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')') {
      if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
      tokens.push_back(std::string(1, ch));
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Parses the value tokens at position i: either an integer literal or the
// negated form ( - <digits> ).
std::optional<BigInt> parse_value(const std::vector<std::string>& toks,
                                  std::size_t i) {
  if (i >= toks.size()) return std::nullopt;
  if (is_integer_token(toks[i])) return BigInt(toks[i]);
  if (toks[i] == "(" && i + 3 < toks.size() && toks[i + 1] == "-" &&
      is_integer_token(toks[i + 2]) && toks[i + 3] == ")")
    return BigInt("-" + toks[i + 2]);
  return std::nullopt;
}

} // namespace

SolverOutcome parse_outcome(std::string_view solver_output) {
  std::vector<std::string> toks = tokenize(solver_output);

  std::size_t status_pos = toks.size();
  SolverStatus status = SolverStatus::malformed;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "sat") { status = SolverStatus::sat; status_pos = i; }
    else if (toks[i] == "unsat") { status = SolverStatus::unsat; status_pos = i; }
    else if (toks[i] == "unknown") { status = SolverStatus::unknown; status_pos = i; }
  }
  if (status_pos == toks.size()) return {};
  if (status != SolverStatus::sat) return {status, std::nullopt};

  // Model shape: (define-fun S () Int <v>), other bindings ignored.
  for (std::size_t i = status_pos + 1; i + 5 < toks.size(); ++i) {
    if (toks[i] != "define-fun" || toks[i + 1] != "S" || toks[i + 2] != "(" ||
        toks[i + 3] != ")" || toks[i + 4] != "Int")
      continue;
    if (auto v = parse_value(toks, i + 5)) return {SolverStatus::sat, v};
    return {};
  }
  return {};
}

std::vector<BigInt> drive_script(const std::string& script, int limit,
                                 const DriveOptions& options) {
  if (limit < 1) throw Error(errc::invalid_argument, "limit must be >= 1");
  if (options.solver_command.empty())
    throw Error(errc::solver_unavailable, "no solver command configured");

  std::string current = script;
  if (current.empty() || current.back() != '\n') current += '\n';

  std::vector<BigInt> found;
  for (int i = 0; i < limit; ++i) {
    ProcessResult pr =
        run_process(options.solver_command, current, options.timeout_seconds);
    if (pr.timed_out)
      throw Error(errc::solver_timeout,
                  "solver exceeded " + std::to_string(options.timeout_seconds) +
                      " s");
    if (pr.exit_code == 127)
      throw Error(errc::solver_unavailable,
                  "command failed to start: " + options.solver_command);
    SolverOutcome outcome = parse_outcome(pr.out);
    if (outcome.status == SolverStatus::unsat) break;
    if (outcome.status != SolverStatus::sat)
      throw Error(errc::solver_error,
                  outcome.status == SolverStatus::unknown
                      ? "solver answered unknown"
                      : "unparseable solver output (exit " +
                            std::to_string(pr.exit_code) + ")");
    found.push_back(*outcome.model_value);
    current += blocking_clause(*outcome.model_value) + "\n(check-sat)\n(get-model)\n";
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<BigInt> drive_solver(const CongruenceSystem& system,
                                 const SearchMode& mode, int limit,
                                 const DriveOptions& options) {
  return drive_script(emit_script(system, mode), limit, options);
}

} // namespace mignotte
