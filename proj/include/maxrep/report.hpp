#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxrep/result.hpp"
#include "maxrep/seq.hpp"

namespace maxrep {

/// One run of mss/krep, shaped for JSON emission (schema 1). Witness indices
/// are 1-based into the decoded input. In text mode `input` and the result
/// strings are UTF-8; in byte mode they are hex-encoded and `input` may be
/// omitted for large inputs.
struct RunReport {
  std::string command;  // "mss" or "krep"
  bool byte_mode = false;
  std::optional<std::string> input;  // decoded input (text) / hex (bytes)
  std::size_t input_length = 0;
  std::size_t k = 2;
  std::optional<Symbol> sigma;
  std::string result;        // mss: the square; krep: the unit
  std::size_t result_length = 0;
  std::string unit;          // repeating unit (mss: the half)
  std::vector<std::vector<Index>> witness;  // k blocks
  bool verified = false;
  bool maximality_checked = false;
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

RunReport make_report(const std::string& command, const Seq& input,
                      bool byte_mode, const KRepResult& result,
                      double elapsed_ms);

std::string report_to_json(const RunReport& r);

// Parses a schema-1 report; throws Error on malformed input.
RunReport report_from_json(const std::string& text);

// Re-checks a report against its input: witness blocks must be strictly
// increasing, pairwise ordered, and spell unit^k within `input`.
bool recheck_witness(const RunReport& r, const Seq& input);

std::string encode_symbols(const Seq& s, bool byte_mode);  // UTF-8 or hex
Seq decode_symbols(const std::string& text, bool byte_mode);

}  // namespace maxrep
