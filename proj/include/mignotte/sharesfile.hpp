#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mignotte/scheme.hpp"

namespace mignotte {

enum class ShareFormat { paper, structured };

// In-memory image of a shares file. Participant ids are record positions.
// The paper format stores only (value, modulus) pairs, so threshold stays
// empty there; the structured format carries moduli and threshold alongside
// the shares and round-trips losslessly.
struct SharesDocument {
  std::vector<Share> shares;
  std::optional<int> threshold; // structured format only

  std::vector<BigInt> moduli() const;
};

SharesDocument document_from_shares(const std::vector<Share>& shares,
                                    std::optional<int> threshold);

// Writer for the classic format, one record per line, written exactly as
// "<value> , <modulus> \n" with single spaces around the comma and one
// trailing space.
std::string write_paper(const SharesDocument& doc);

// Reader tolerating any whitespace layout of the three tokens
// <value> , <modulus> per line. Blank lines are skipped.
SharesDocument read_paper(std::istream& in);

// Structured plain-text format, fixed field order:
//   moduli: <m0> <m1> ...
//   threshold: <t>
//   shares:
//   <participant_id> <value>
std::string write_structured(const SharesDocument& doc);

SharesDocument read_structured(std::istream& in);

// Sniffs the format: structured documents start with a "moduli:" line.
ShareFormat detect_format(std::istream& in);

SharesDocument read_document(const std::filesystem::path& path,
                             std::optional<ShareFormat> format = {});

void write_document(const std::filesystem::path& path,
                    const SharesDocument& doc, ShareFormat format);

} // namespace mignotte
