#include "mignotte/sharesfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mignotte/error.hpp"

namespace mignotte {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

BigInt parse_int(const std::string& tok, int line_no) {
  for (std::size_t i = 0; i < tok.size(); ++i) {
    char c = tok[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c == '-' && i == 0 && tok.size() > 1) continue;
    throw Error(errc::io_error, "line " + std::to_string(line_no) +
                                    ": expected an integer, got '" + tok + "'");
  }
  if (tok.empty())
    throw Error(errc::io_error,
                "line " + std::to_string(line_no) + ": empty integer token");
  return BigInt(tok);
}

int parse_small_int(const std::string& tok, int line_no) {
  BigInt v = parse_int(tok, line_no);
  if (v < 0 || v > 1000000)
    throw Error(errc::io_error, "line " + std::to_string(line_no) + ": '" +
                                    tok + "' is out of range");
  return v.convert_to<int>();
}

} // namespace

std::vector<BigInt> SharesDocument::moduli() const {
  std::vector<BigInt> out;
  out.reserve(shares.size());
  for (const Share& s : shares) out.push_back(s.modulus);
  return out;
}

SharesDocument document_from_shares(const std::vector<Share>& shares,
                                    std::optional<int> threshold) {
  return {shares, threshold};
}

std::string write_paper(const SharesDocument& doc) {
  std::string out;
  for (const Share& s : doc.shares)
    out += s.value.str() + " , " + s.modulus.str() + " \n";
  return out;
}

SharesDocument read_paper(std::istream& in) {
  SharesDocument doc;
  std::string line;
  int line_no = 0;
  int id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[1] != ",")
      throw Error(errc::io_error,
                  "line " + std::to_string(line_no) +
                      ": expected '<value> , <modulus>', got '" + line + "'");
    Share s;
    s.participant_id = id++;
    s.value = parse_int(tokens[0], line_no);
    s.modulus = parse_int(tokens[2], line_no);
    doc.shares.push_back(std::move(s));
  }
  if (doc.shares.empty())
    throw Error(errc::io_error, "shares file holds no records");
  return doc;
}

std::string write_structured(const SharesDocument& doc) {
  if (!doc.threshold)
    throw Error(errc::invalid_argument,
                "structured format requires a threshold");
  std::string out = "moduli:";
  for (const Share& s : doc.shares) out += " " + s.modulus.str();
  out += "\nthreshold: " + std::to_string(*doc.threshold) + "\nshares:\n";
  for (const Share& s : doc.shares)
    out += std::to_string(s.participant_id) + " " + s.value.str() + "\n";
  return out;
}

SharesDocument read_structured(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line))
      throw Error(errc::io_error, "structured shares file truncated at line " +
                                      std::to_string(line_no + 1));
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };

  auto moduli_tokens = split_ws(next_line());
  if (moduli_tokens.empty() || moduli_tokens[0] != "moduli:")
    throw Error(errc::io_error, "expected a 'moduli:' line first");
  std::vector<BigInt> moduli;
  for (std::size_t i = 1; i < moduli_tokens.size(); ++i)
    moduli.push_back(parse_int(moduli_tokens[i], line_no));

  auto threshold_tokens = split_ws(next_line());
  if (threshold_tokens.size() != 2 || threshold_tokens[0] != "threshold:")
    throw Error(errc::io_error, "expected a 'threshold: <t>' line");
  int threshold = parse_small_int(threshold_tokens[1], line_no);

  if (split_ws(next_line()) != std::vector<std::string>{"shares:"})
    throw Error(errc::io_error, "expected a 'shares:' line");

  SharesDocument doc;
  doc.threshold = threshold;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw Error(errc::io_error,
                  "line " + std::to_string(line_no) +
                      ": expected '<participant_id> <value>'");
    Share s;
    s.participant_id = parse_small_int(tokens[0], line_no);
    s.value = parse_int(tokens[1], line_no);
    if (s.participant_id < 0 ||
        s.participant_id >= static_cast<int>(moduli.size()))
      throw Error(errc::io_error,
                  "line " + std::to_string(line_no) + ": participant id " +
                      std::to_string(s.participant_id) +
                      " has no modulus entry");
    s.modulus = moduli[s.participant_id];
    doc.shares.push_back(std::move(s));
  }
  if (doc.shares.size() != moduli.size())
    throw Error(errc::io_error,
                "share count " + std::to_string(doc.shares.size()) +
                    " does not match " + std::to_string(moduli.size()) +
                    " moduli");
  // Canonical order: record position equals participant id.
  std::sort(doc.shares.begin(), doc.shares.end(),
            [](const Share& a, const Share& b) {
              return a.participant_id < b.participant_id;
            });
  for (std::size_t i = 0; i < doc.shares.size(); ++i)
    if (doc.shares[i].participant_id != static_cast<int>(i))
      throw Error(errc::io_error,
                  "participant ids must cover 0.." +
                      std::to_string(doc.shares.size() - 1) +
                      " exactly once");
  return doc;
}

ShareFormat detect_format(std::istream& in) {
  auto pos = in.tellg();
  std::string line;
  std::getline(in, line);
  in.clear();
  in.seekg(pos);
  auto tokens = split_ws(line);
  return (!tokens.empty() && tokens[0] == "moduli:") ? ShareFormat::structured
                                                     : ShareFormat::paper;
}

SharesDocument read_document(const std::filesystem::path& path,
                             std::optional<ShareFormat> format) {
  std::ifstream in(path);
  if (!in)
    throw Error(errc::io_error, "cannot open " + path.string());
  ShareFormat f = format ? *format : detect_format(in);
  return f == ShareFormat::paper ? read_paper(in) : read_structured(in);
}

void write_document(const std::filesystem::path& path,
                    const SharesDocument& doc, ShareFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(errc::io_error, "cannot open " + path.string() + " for writing");
  out << (format == ShareFormat::paper ? write_paper(doc)
                                       : write_structured(doc));
  out.flush();
  if (!out)
    throw Error(errc::io_error, "write to " + path.string() + " failed");
}

} // namespace mignotte
