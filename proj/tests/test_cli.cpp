#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mignotte/attack.hpp"
#include "mignotte/cli.hpp"
#include "mignotte/sharesfile.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = mignotte::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& tag) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("mignotte_cli_" + tag + "_" + std::to_string(getpid()) + "_" +
          std::to_string(counter++));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes the worked strict instance to a paper-format file and returns it.
fs::path dealt_paper_file() {
  fs::path p = temp_path("shares");
  CliResult r = run_cli({"deal", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "330", "--out", p.string(), "--format",
                         "paper"});
  REQUIRE(r.exit_code == 0);
  return p;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

} // namespace

TEST_CASE("deal prints the public range and writes the paper file") {
  fs::path p = temp_path("deal");
  CliResult r = run_cli({"deal", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "330", "--out", p.string(), "--format",
                         "paper"});
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 1);
  CHECK(lines[0] == "Secret range: (221, 693)");
  CHECK(slurp(p) == "1 , 7 \n6 , 9 \n0 , 11 \n5 , 13 \n7 , 17 \n");
  fs::remove(p);
}

TEST_CASE("deal enforces strict coprimality unless lax is chosen") {
  fs::path p = temp_path("lax");
  CliResult r = run_cli({"deal", "--moduli", "7,9,11,13,15", "-t", "3",
                         "--secret", "450", "--out", p.string(), "--format",
                         "paper"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("NotPairwiseCoprime") != std::string::npos);
  CHECK(r.err.find("(9, 15)") != std::string::npos);
  CHECK_FALSE(fs::exists(p));

  r = run_cli({"deal", "--moduli", "7,9,11,13,15", "-t", "3", "--secret",
               "450", "--out", p.string(), "--format", "paper", "--mode",
               "lax"});
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out)[0] == "Secret range: (195, 693)");
  CHECK(slurp(p) == "2 , 7 \n0 , 9 \n10 , 11 \n8 , 13 \n0 , 15 \n");
  fs::remove(p);
}

TEST_CASE("deal rejects an out-of-range secret and bad paths") {
  fs::path p = temp_path("range");
  CliResult r = run_cli({"deal", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "221", "--out", p.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("SecretOutOfRange") != std::string::npos);

  r = run_cli({"deal", "--moduli", "7,9,11,13,17", "-t", "3", "--secret",
               "330", "--out", "/nonexistent-dir/shares.txt"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("reconstruct recovers the secret from a paper file") {
  fs::path p = dealt_paper_file();
  CliResult r = run_cli(
      {"reconstruct", "--shares", p.string(), "--ids", "1,2,4", "-t", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "330\n");

  r = run_cli({"reconstruct", "--shares", p.string(), "--ids", "1,2", "-t", "3"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("InsufficientShares") != std::string::npos);

  // Paper files carry no threshold.
  r = run_cli({"reconstruct", "--shares", p.string(), "--ids", "1,2,4"});
  CHECK(r.exit_code == 1);

  r = run_cli({"reconstruct", "--shares", "/no/such/file", "--ids", "1,2,4",
               "-t", "3"});
  CHECK(r.exit_code == 2);
  fs::remove(p);
}

TEST_CASE("reconstruct reads the threshold from structured files") {
  fs::path p = temp_path("structured");
  CliResult r = run_cli({"deal", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "330", "--out", p.string()});
  REQUIRE(r.exit_code == 0);
  r = run_cli({"reconstruct", "--shares", p.string(), "--ids", "0,3,4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "330\n");
  fs::remove(p);
}

TEST_CASE("reconstruct flags tampering through the range check") {
  fs::path p = temp_path("tampered");
  {
    std::ofstream f(p);
    f << "1 , 7 \n6 , 9 \n1 , 11 \n5 , 13 \n7 , 17 \n"; // id 2 corrupted
  }
  CliResult r = run_cli(
      {"reconstruct", "--shares", p.string(), "--ids", "0,1,2", "-t", "3"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("CandidateOutOfRange") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("attack in positive mode lists the first candidates") {
  fs::path p = dealt_paper_file();
  CliResult r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2",
                         "--positive", "--limit", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "33\n132\n231\n330\n429\n");

  r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2,4",
               "--positive", "--limit", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "330\n2013\n3696\n5379\n7062\n");
  fs::remove(p);
}

TEST_CASE("attack in range mode keeps only in-bound candidates") {
  fs::path p = dealt_paper_file();
  CliResult r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2",
                         "--range", "221:693"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "231\n330\n429\n528\n627\n");

  r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2,4", "--range",
               "221:693"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "330\n");

  // Bounds derived from the file moduli and the threshold.
  r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2", "-t", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "231\n330\n429\n528\n627\n");

  // A window holding no candidate is an empty result.
  r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2", "--range",
               "100:120"});
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());
  fs::remove(p);
}

TEST_CASE("attack reports forged coalitions as inconsistent") {
  fs::path p = temp_path("forged");
  {
    std::ofstream f(p);
    f << "0 , 4 \n1 , 6 \n";
  }
  CliResult r = run_cli({"attack", "--shares", p.string(), "--ids", "0,1",
                         "--range", "1:100"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("Inconsistent") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("attack emits a machine-readable report") {
  fs::path p = dealt_paper_file();
  CliResult r = run_cli({"attack", "--shares", p.string(), "--ids", "1,2",
                         "--range", "221:693", "--json"});
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == "5");
  CHECK(j["unique"] == false);
  CHECK(j["mode"] == "range");
  CHECK(j["combined"]["residue"] == "33");
  CHECK(j["combined"]["modulus"] == "99");
  CHECK(j["candidates"] ==
        json::array({"231", "330", "429", "528", "627"}));
  CHECK(j["residual_entropy_bits"].get<double>() ==
        doctest::Approx(std::log2(5.0)).epsilon(1e-9));
  fs::remove(p);
}

TEST_CASE("audit prints one row per coalition plus a summary") {
  CliResult r = run_cli({"audit", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "330", "--size", "2"});
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 12); // header, ten rows, summary
  CHECK(lines[1] == "{0,1} 7");
  CHECK(lines[10] == "{3,4} 2");
  CHECK(lines[11] == "size=2 coalitions=10 min=2 max=7 mean=4.1");

  r = run_cli({"audit", "--moduli", "7,9,11,13,17", "-t", "3", "--secret",
               "330", "--size", "3"});
  CHECK(r.exit_code == 0);
  for (std::size_t i = 1; i + 1 < lines_of(r.out).size(); ++i)
    CHECK(lines_of(r.out)[i].ends_with(" 1"));
}

TEST_CASE("audit json output") {
  CliResult r = run_cli({"audit", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "330", "--size", "2", "--json"});
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["coalition_size"] == 2);
  CHECK(j["coalitions"].size() == 10);
  CHECK(j["coalitions"][0]["ids"] == json::array({0, 1}));
  CHECK(j["coalitions"][0]["count"] == "7");
  CHECK(j["min"] == "2");
  CHECK(j["max"] == "7");
  CHECK(j["mean"].get<double>() == doctest::Approx(4.1));
}

TEST_CASE("audit rejects nonsense sizes and non-sequences") {
  CliResult r = run_cli({"audit", "--moduli", "7,9,11,13,17", "-t", "3",
                         "--secret", "330", "--size", "0"});
  CHECK(r.exit_code == 1);

  r = run_cli({"audit", "--moduli", "7,9,11,13,15", "-t", "3", "--secret",
               "450", "--size", "2"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("NotPairwiseCoprime") != std::string::npos);

  r = run_cli({"audit", "--moduli", "7,9,11,13,15", "-t", "3", "--secret",
               "450", "--size", "2", "--mode", "lax"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("emit-smt writes the golden script") {
  const std::string golden =
      "(set-logic ALL)\n"
      "(declare-const S Int)\n"
      "(declare-const I0 Int)\n"
      "(declare-const I1 Int)\n"
      "(assert (> S 0))\n"
      "(assert (= I0 (mod S 9)))\n"
      "(assert (= I0 6))\n"
      "(assert (= I1 (mod S 11)))\n"
      "(assert (= I1 0))\n"
      "(check-sat)\n"
      "(get-model)\n";

  fs::path shares = dealt_paper_file();
  fs::path script = temp_path("script");
  CliResult r = run_cli({"emit-smt", "--shares", shares.string(), "--ids",
                         "1,2", "--positive", "--out", script.string()});
  CHECK(r.exit_code == 0);
  CHECK(slurp(script) == golden);

  // Stdout variant is byte-identical.
  r = run_cli({"emit-smt", "--shares", shares.string(), "--ids", "1,2",
               "--positive"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden);

  // Range mode swaps the bound line.
  r = run_cli({"emit-smt", "--shares", shares.string(), "--ids", "1,2",
               "--range", "221:693"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(assert (and (> S 221) (< S 693)))") != std::string::npos);

  r = run_cli({"emit-smt", "--shares", shares.string(), "--ids", "1,9",
               "--positive"});
  CHECK(r.exit_code == 1);

  fs::remove(shares);
  fs::remove(script);
}

TEST_CASE("solve-smt drives an external solver over a script file") {
  fs::path shares = dealt_paper_file();
  fs::path script = temp_path("solve");
  REQUIRE(run_cli({"emit-smt", "--shares", shares.string(), "--ids", "1,2",
                   "--positive", "--out", script.string()})
              .exit_code == 0);

  CliResult r = run_cli({"solve-smt", script.string(), "--solver-cmd",
                         MINISMT_PATH, "--limit", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "33\n132\n231\n330\n429\n");

  r = run_cli({"solve-smt", script.string(), "--solver-cmd",
               "/no/such/solver", "--limit", "5"});
  CHECK(r.exit_code == 4);

  r = run_cli({"solve-smt", "/no/such/script.smt2", "--solver-cmd",
               MINISMT_PATH});
  CHECK(r.exit_code == 2);

  // An unsatisfiable script is an empty result.
  fs::path unsat_script = temp_path("unsat");
  {
    std::ofstream f(unsat_script);
    f << "(set-logic ALL)\n(declare-const S Int)\n(declare-const I0 Int)\n"
         "(assert (> S 0))\n(assert (= I0 (mod S 4)))\n(assert (= I0 0))\n"
         "(assert (distinct S 4))\n(assert (< S 8))\n(check-sat)\n(get-model)\n";
  }
  r = run_cli({"solve-smt", unsat_script.string(), "--solver-cmd",
               MINISMT_PATH});
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());

  fs::remove(shares);
  fs::remove(script);
  fs::remove(unsat_script);
}

TEST_CASE("cli attack output equals the library output verbatim") {
  using namespace mignotte;
  MignotteSequence seq = generate_sequence(5, 3, 20, 987654);
  SecretBounds b = bounds(seq);
  BigInt secret = b.beta + (b.alpha - b.beta) / 2;
  std::vector<Share> shares = deal(seq, secret);

  fs::path p = temp_path("verbatim");
  write_document(p, document_from_shares(shares, 3), ShareFormat::paper);

  CongruenceSystem sys;
  sys.add(0, {shares[0].value, shares[0].modulus});
  sys.add(3, {shares[3].value, shares[3].modulus});

  for (SearchMode mode :
       {SearchMode::positive(7), SearchMode::range(b)}) {
    std::string expected;
    for (const BigInt& c : enumerate_candidates(sys, mode))
      expected += c.str() + "\n";

    std::vector<std::string> args{"attack", "--shares", p.string(), "--ids",
                                  "0,3"};
    if (mode.kind == SearchMode::Kind::positive) {
      args.insert(args.end(), {"--positive", "--limit", "7"});
    } else {
      args.insert(args.end(),
                  {"--range", b.beta.str() + ":" + b.alpha.str()});
    }
    CliResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    CHECK(r.out == expected);
  }
  fs::remove(p);
}

TEST_CASE("deal names the NotMignotte rule") {
  fs::path p = temp_path("notmig");
  CliResult r = run_cli({"deal", "--moduli", "2,3,7", "-t", "2", "--secret",
                         "6", "--out", p.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("NotMignotte") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({}).exit_code == 1);
  CHECK(run_cli({"frobnicate"}).exit_code == 1);
  CHECK(run_cli({"deal"}).exit_code == 1); // missing required options
  CliResult r = run_cli({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("deal") != std::string::npos);
  r = run_cli({"attack", "--shares", "x", "--ids", "1", "--positive",
               "--range", "1:2"});
  CHECK(r.exit_code == 1); // mutually exclusive flags
}
