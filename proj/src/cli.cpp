#include "mignotte/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mignotte/attack.hpp"
#include "mignotte/scheme.hpp"
#include "mignotte/sharesfile.hpp"
#include "mignotte/smtbridge.hpp"

namespace mignotte::cli {

namespace {

using nlohmann::json;

BigInt parse_big(const std::string& text) {
  if (text.empty())
    throw Error(errc::invalid_argument, "empty integer argument");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c == '-' && i == 0 && text.size() > 1) continue;
    throw Error(errc::invalid_argument, "'" + text + "' is not an integer");
  }
  return BigInt(text);
}

std::vector<BigInt> parse_moduli(const std::vector<std::string>& tokens) {
  std::vector<BigInt> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(parse_big(t));
  return out;
}

SecretBounds parse_range_arg(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw Error(errc::invalid_argument,
                "--range expects '<beta>:<alpha>', got '" + text + "'");
  return {parse_big(text.substr(0, colon)), parse_big(text.substr(colon + 1))};
}

Validation parse_mode(const std::string& text) {
  if (text == "strict") return Validation::strict;
  if (text == "lax") return Validation::lax;
  throw Error(errc::invalid_argument, "--mode must be strict or lax");
}

// The document's record order defines participant ids, so the moduli must
// already be ascending for ids to survive the sorting sequence constructor.
MignotteSequence sequence_of(const SharesDocument& doc, int threshold) {
  auto moduli = doc.moduli();
  if (!std::is_sorted(moduli.begin(), moduli.end()))
    throw Error(errc::invalid_argument,
                "shares file moduli are not in ascending order");
  return MignotteSequence(std::move(moduli), threshold);
}

std::vector<Share> select_shares(const SharesDocument& doc,
                                 const std::vector<int>& ids) {
  if (ids.empty())
    throw Error(errc::invalid_argument, "no participant ids given");
  std::vector<Share> out;
  out.reserve(ids.size());
  for (int id : ids) {
    if (id < 0 || id >= static_cast<int>(doc.shares.size()))
      throw Error(errc::invalid_argument,
                  "participant id " + std::to_string(id) + " out of range 0.." +
                      std::to_string(doc.shares.size() - 1));
    out.push_back(doc.shares[id]);
  }
  return out;
}

int resolve_threshold(const SharesDocument& doc, int flag_value) {
  if (flag_value > 0) return flag_value;
  if (doc.threshold) return *doc.threshold;
  throw Error(errc::invalid_argument,
              "threshold unknown: pass -t for paper-format share files");
}

std::string ids_brace(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

json report_json(const AttackReport& report) {
  json j;
  j["combined"] = {{"residue", report.combined.residue.str()},
                   {"modulus", report.combined.modulus.str()}};
  j["mode"] =
      report.mode.kind == SearchMode::Kind::range ? "range" : "positive";
  if (report.mode.kind == SearchMode::Kind::range)
    j["bounds"] = {{"beta", report.mode.bounds.beta.str()},
                   {"alpha", report.mode.bounds.alpha.str()}};
  j["count"] = report.count.str();
  j["residual_entropy_bits"] = report.residual_entropy_bits;
  j["unique"] = report.unique;
  json cands = json::array();
  for (const BigInt& c : report.candidates) cands.push_back(c.str());
  j["candidates"] = cands;
  return j;
}

int failure_exit(const Error& e, std::ostream& err) {
  err << e.what() << "\n";
  switch (e.code()) {
    case errc::io_error: return 2;
    case errc::solver_unavailable: return 4;
    default: return 1;
  }
}

struct DealArgs {
  std::vector<std::string> moduli;
  int threshold = 0;
  std::string secret;
  std::string out_path;
  std::string format = "structured";
  std::string mode = "strict";
};

int run_deal(const DealArgs& a, std::ostream& out) {
  MignotteSequence seq(parse_moduli(a.moduli), a.threshold);
  validate(seq, parse_mode(a.mode));
  SecretBounds b = bounds(seq);
  out << "Secret range: (" << b.beta << ", " << b.alpha << ")\n";
  std::vector<Share> shares = deal(seq, parse_big(a.secret));
  ShareFormat format =
      a.format == "paper" ? ShareFormat::paper : ShareFormat::structured;
  write_document(a.out_path, document_from_shares(shares, a.threshold),
                 format);
  out << "Wrote " << shares.size() << " shares to " << a.out_path << "\n";
  return 0;
}

struct ReconstructArgs {
  std::string shares_path;
  std::vector<int> ids;
  int threshold = 0;
  std::string format = "auto";
};

std::optional<ShareFormat> format_override(const std::string& name) {
  if (name == "paper") return ShareFormat::paper;
  if (name == "structured") return ShareFormat::structured;
  return std::nullopt;
}

int run_reconstruct(const ReconstructArgs& a, std::ostream& out) {
  SharesDocument doc = read_document(a.shares_path, format_override(a.format));
  MignotteSequence seq = sequence_of(doc, resolve_threshold(doc, a.threshold));
  std::vector<Share> shares = select_shares(doc, a.ids);
  out << reconstruct(shares, seq) << "\n";
  return 0;
}

struct AttackArgs {
  std::string shares_path;
  std::vector<int> ids;
  bool positive = false;
  std::string range;
  int threshold = 0;
  int limit = 5;
  bool as_json = false;
  std::string format = "auto";
};

SearchMode resolve_attack_mode(const AttackArgs& a, const SharesDocument& doc) {
  if (a.positive && !a.range.empty())
    throw Error(errc::invalid_argument,
                "--positive and --range are mutually exclusive");
  if (a.positive) return SearchMode::positive(a.limit);
  if (!a.range.empty()) return SearchMode::range(parse_range_arg(a.range));
  // Default is the informed attacker: derive the public bounds.
  MignotteSequence seq = sequence_of(doc, resolve_threshold(doc, a.threshold));
  return SearchMode::range(bounds(seq));
}

int run_attack(const AttackArgs& a, std::ostream& out) {
  if (a.positive && !a.range.empty())
    throw Error(errc::invalid_argument,
                "--positive and --range are mutually exclusive");
  SharesDocument doc = read_document(a.shares_path, format_override(a.format));
  CongruenceSystem system =
      CongruenceSystem::from_shares(select_shares(doc, a.ids));
  AttackReport report = attack_report(system, resolve_attack_mode(a, doc));
  if (a.as_json) {
    out << report_json(report).dump(2) << "\n";
  } else {
    for (const BigInt& c : report.candidates) out << c << "\n";
  }
  return report.count >= 1 ? 0 : 3;
}

struct AuditArgs {
  std::vector<std::string> moduli;
  int threshold = 0;
  std::string secret;
  int size = 0;
  std::string mode = "strict";
  bool as_json = false;
};

int run_audit(const AuditArgs& a, std::ostream& out) {
  MignotteSequence seq(parse_moduli(a.moduli), a.threshold);
  validate(seq, parse_mode(a.mode));
  AuditReport report = security_audit(seq, parse_big(a.secret), a.size);
  if (a.as_json) {
    json j;
    j["coalition_size"] = report.coalition_size;
    json rows = json::array();
    for (const CoalitionOutcome& c : report.coalitions)
      rows.push_back({{"ids", c.ids}, {"count", c.count.str()}});
    j["coalitions"] = rows;
    j["min"] = report.min_count.str();
    j["max"] = report.max_count.str();
    j["mean"] = report.mean_count;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "coalition count\n";
  for (const CoalitionOutcome& c : report.coalitions)
    out << ids_brace(c.ids) << " " << c.count << "\n";
  out << "size=" << report.coalition_size
      << " coalitions=" << report.coalitions.size()
      << " min=" << report.min_count << " max=" << report.max_count
      << " mean=" << report.mean_count << "\n";
  return 0;
}

struct EmitArgs {
  std::string shares_path;
  std::vector<int> ids;
  bool positive = false;
  std::string range;
  int threshold = 0;
  std::string out_path = "-";
  std::string format = "auto";
};

SearchMode resolve_emit_mode(const EmitArgs& a, const SharesDocument& doc) {
  if (a.positive && !a.range.empty())
    throw Error(errc::invalid_argument,
                "--positive and --range are mutually exclusive");
  if (!a.range.empty()) return SearchMode::range(parse_range_arg(a.range));
  if (!a.positive && a.threshold > 0) {
    MignotteSequence seq = sequence_of(doc, a.threshold);
    return SearchMode::range(bounds(seq));
  }
  return SearchMode::positive();
}

int run_emit_smt(const EmitArgs& a, std::ostream& out) {
  if (a.positive && !a.range.empty())
    throw Error(errc::invalid_argument,
                "--positive and --range are mutually exclusive");
  SharesDocument doc = read_document(a.shares_path, format_override(a.format));
  CongruenceSystem system =
      CongruenceSystem::from_shares(select_shares(doc, a.ids));
  std::string script = emit_script(system, resolve_emit_mode(a, doc));
  if (a.out_path == "-") {
    out << script;
    return 0;
  }
  std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw Error(errc::io_error, "cannot open " + a.out_path + " for writing");
  file << script;
  file.flush();
  if (!file) throw Error(errc::io_error, "write to " + a.out_path + " failed");
  return 0;
}

struct SolveArgs {
  std::string script_path;
  std::string solver_cmd;
  int limit = 5;
  double timeout = 10.0;
};

int run_solve_smt(const SolveArgs& a, std::ostream& out) {
  std::ifstream file(a.script_path);
  if (!file)
    throw Error(errc::io_error, "cannot open " + a.script_path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  DriveOptions options{a.solver_cmd, a.timeout};
  std::vector<BigInt> found = drive_script(buffer.str(), a.limit, options);
  for (const BigInt& c : found) out << c << "\n";
  return found.empty() ? 3 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Mignotte threshold secret sharing and its under-threshold "
               "cryptanalysis"};
  app.name("mignotte");
  app.require_subcommand(1);

  DealArgs deal_args;
  auto* deal_cmd =
      app.add_subcommand("deal", "Split a secret into shares");
  deal_cmd->add_option("--moduli", deal_args.moduli, "sequence moduli")
      ->required()
      ->delimiter(',');
  deal_cmd->add_option("-t,--threshold", deal_args.threshold)->required();
  deal_cmd->add_option("--secret", deal_args.secret)->required();
  deal_cmd->add_option("--out", deal_args.out_path, "shares file to write")
      ->required();
  deal_cmd->add_option("--format", deal_args.format)
      ->check(CLI::IsMember({"paper", "structured"}));
  deal_cmd->add_option("--mode", deal_args.mode)
      ->check(CLI::IsMember({"strict", "lax"}));

  ReconstructArgs rec_args;
  auto* rec_cmd = app.add_subcommand(
      "reconstruct", "Recover the secret from a threshold of shares");
  rec_cmd->add_option("--shares", rec_args.shares_path)->required();
  rec_cmd->add_option("--ids", rec_args.ids, "participant ids")
      ->required()
      ->delimiter(',');
  rec_cmd->add_option("-t,--threshold", rec_args.threshold);
  rec_cmd->add_option("--format", rec_args.format)
      ->check(CLI::IsMember({"auto", "paper", "structured"}));

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand(
      "attack", "Enumerate secrets consistent with a coalition of shares");
  attack_cmd->add_option("--shares", attack_args.shares_path)->required();
  attack_cmd->add_option("--ids", attack_args.ids, "coalition ids, in order")
      ->required()
      ->delimiter(',');
  attack_cmd->add_flag("--positive", attack_args.positive,
                       "only assume S > 0");
  attack_cmd->add_option("--range", attack_args.range,
                         "public bounds as <beta>:<alpha>");
  attack_cmd->add_option("-t,--threshold", attack_args.threshold,
                         "derive bounds from the file moduli");
  attack_cmd->add_option("--limit", attack_args.limit,
                         "candidate cap in positive mode");
  attack_cmd->add_flag("--json", attack_args.as_json);
  attack_cmd->add_option("--format", attack_args.format)
      ->check(CLI::IsMember({"auto", "paper", "structured"}));

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand(
      "audit", "Candidate counts for every coalition of a given size");
  audit_cmd->add_option("--moduli", audit_args.moduli)
      ->required()
      ->delimiter(',');
  audit_cmd->add_option("-t,--threshold", audit_args.threshold)->required();
  audit_cmd->add_option("--secret", audit_args.secret)->required();
  audit_cmd->add_option("--size", audit_args.size, "coalition size")
      ->required();
  audit_cmd->add_option("--mode", audit_args.mode)
      ->check(CLI::IsMember({"strict", "lax"}));
  audit_cmd->add_flag("--json", audit_args.as_json);

  EmitArgs emit_args;
  auto* emit_cmd = app.add_subcommand(
      "emit-smt", "Write the coalition's query as an SMT-LIB2 script");
  emit_cmd->add_option("--shares", emit_args.shares_path)->required();
  emit_cmd->add_option("--ids", emit_args.ids)->required()->delimiter(',');
  emit_cmd->add_flag("--positive", emit_args.positive);
  emit_cmd->add_option("--range", emit_args.range);
  emit_cmd->add_option("-t,--threshold", emit_args.threshold);
  emit_cmd->add_option("--out", emit_args.out_path, "output path, - for stdout");
  emit_cmd->add_option("--format", emit_args.format)
      ->check(CLI::IsMember({"auto", "paper", "structured"}));

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand(
      "solve-smt", "Enumerate models of a script via an external solver");
  solve_cmd->add_option("script", solve_args.script_path)->required();
  solve_cmd->add_option("--solver-cmd", solve_args.solver_cmd,
                        "shell command reading the script on stdin")
      ->required();
  solve_cmd->add_option("--limit", solve_args.limit);
  solve_cmd->add_option("--timeout", solve_args.timeout,
                        "seconds per solver call");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (deal_cmd->parsed()) return run_deal(deal_args, out);
    if (rec_cmd->parsed()) return run_reconstruct(rec_args, out);
    if (attack_cmd->parsed()) return run_attack(attack_args, out);
    if (audit_cmd->parsed()) return run_audit(audit_args, out);
    if (emit_cmd->parsed()) return run_emit_smt(emit_args, out);
    if (solve_cmd->parsed()) return run_solve_smt(solve_args, out);
  } catch (const Error& e) {
    return failure_exit(e, err);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 1;
}

} // namespace mignotte::cli
