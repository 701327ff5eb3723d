#include "maxrep/report.hpp"

#include <json.hpp>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"

namespace maxrep {

namespace {

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error("invalid hex digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return out;
}

}  // namespace

std::string encode_symbols(const Seq& s, bool byte_mode) {
  return byte_mode ? to_hex(s.to_bytes()) : s.to_utf8();
}

Seq decode_symbols(const std::string& text, bool byte_mode) {
  return byte_mode ? Seq::from_bytes(from_hex(text)) : Seq::from_utf8(text);
}

RunReport make_report(const std::string& command, const Seq& input,
                      bool byte_mode, const KRepResult& result,
                      double elapsed_ms) {
  RunReport r;
  r.command = command;
  r.byte_mode = byte_mode;
  r.input = encode_symbols(input, byte_mode);
  r.input_length = static_cast<std::size_t>(input.size());
  r.k = result.k;
  r.sigma = result.sigma;
  r.unit = encode_symbols(result.unit, byte_mode);
  if (command == "mss") {
    r.result = encode_symbols(result.unit.repeat(2), byte_mode);
    r.result_length = static_cast<std::size_t>(result.unit.size()) * 2;
  } else {
    r.result = r.unit;
    r.result_length = static_cast<std::size_t>(result.unit.size());
  }
  r.witness.reserve(result.witness.size());
  for (const Embedding& e : result.witness) r.witness.push_back(e.indices);
  r.verified = result.verified;
  r.elapsed_ms = elapsed_ms;
  return r;
}

std::string report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = r.command;
  j["byte_mode"] = r.byte_mode;
  if (r.input) j["input"] = *r.input;
  j["input_length"] = r.input_length;
  j["k"] = r.k;
  if (r.sigma) {
    j["sigma"] = r.byte_mode ? to_hex(Seq::repeated(*r.sigma, 1).to_bytes())
                             : Seq::repeated(*r.sigma, 1).to_utf8();
  } else {
    j["sigma"] = nullptr;
  }
  j["result"] = r.result;
  j["result_length"] = r.result_length;
  j["unit"] = r.unit;
  j["witness"] = r.witness;
  j["verified"] = r.verified;
  j["maximality_checked"] = r.maximality_checked;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.seed) {
    j["seed"] = *r.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j.dump(2);
}

RunReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad report JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != 1) throw Error("unsupported schema");
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.byte_mode = j.value("byte_mode", false);
    if (j.contains("input") && !j["input"].is_null()) {
      r.input = j["input"].get<std::string>();
    }
    r.input_length = j.at("input_length").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    if (j.contains("sigma") && !j["sigma"].is_null()) {
      Seq s = decode_symbols(j["sigma"].get<std::string>(), r.byte_mode);
      if (s.size() == 1) r.sigma = s.at(1);
    }
    r.result = j.at("result").get<std::string>();
    r.result_length = j.at("result_length").get<std::size_t>();
    r.unit = j.at("unit").get<std::string>();
    r.witness = j.at("witness").get<std::vector<std::vector<Index>>>();
    r.verified = j.at("verified").get<bool>();
    r.maximality_checked = j.value("maximality_checked", false);
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    if (j.contains("seed") && !j["seed"].is_null()) {
      r.seed = j["seed"].get<std::uint64_t>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad report JSON: ") + e.what());
  }
}

bool recheck_witness(const RunReport& r, const Seq& input) {
  Seq unit;
  try {
    unit = decode_symbols(r.unit, r.byte_mode);
  } catch (const Error&) {
    return false;
  }
  if (r.witness.size() != r.k) return false;
  Index last = 0;
  for (const auto& block : r.witness) {
    Embedding e{block};
    if (!is_embedding_of(e, unit, input)) return false;
    if (!block.empty()) {
      if (block.front() <= last) return false;
      last = block.back();
    }
  }
  return true;
}

}  // namespace maxrep
