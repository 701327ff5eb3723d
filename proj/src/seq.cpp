#include "maxrep/seq.hpp"

#include <algorithm>

#include "maxrep/errors.hpp"

namespace maxrep {

Seq Seq::from_utf8(std::string_view text) {
  std::vector<Symbol> out;
  if (!utf8_decode(text, out)) {
    throw BadEncoding("input is not valid UTF-8");
  }
  return Seq(std::move(out));
}

Seq Seq::from_bytes(std::string_view bytes) {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) out.push_back(static_cast<Symbol>(c));
  return Seq(std::move(out));
}

Seq Seq::repeated(Symbol sigma, std::size_t count) {
  return Seq(std::vector<Symbol>(count, sigma));
}

Seq Seq::closed(Index lo, Index hi) const {
  lo = std::max<Index>(lo, 1);
  hi = std::min<Index>(hi, size());
  if (lo > hi) return Seq();
  return Seq(std::vector<Symbol>(symbols_.begin() + (lo - 1),
                                 symbols_.begin() + hi));
}

Seq Seq::repeat(std::size_t k) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.insert(out.end(), symbols_.begin(), symbols_.end());
  }
  return Seq(std::move(out));
}

std::size_t Seq::count(Symbol sigma) const {
  return static_cast<std::size_t>(
      std::count(symbols_.begin(), symbols_.end(), sigma));
}

std::string Seq::to_utf8() const { return utf8_encode(symbols_); }

std::string Seq::to_bytes() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    if (s > 0xff) throw BadEncoding("symbol does not fit in one byte");
    out.push_back(static_cast<char>(s));
  }
  return out;
}

Seq operator+(const Seq& a, const Seq& b) {
  std::vector<Symbol> out;
  out.reserve(a.symbols().size() + b.symbols().size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Seq(std::move(out));
}

bool is_subsequence(const Seq& pattern, const Seq& host) {
  std::size_t p = 0;
  for (Symbol s : host) {
    if (p == pattern.symbols().size()) break;
    if (s == pattern.symbols()[p]) ++p;
  }
  return p == pattern.symbols().size();
}

bool utf8_decode(std::string_view text, std::vector<Symbol>& out) {
  out.clear();
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c0 = static_cast<unsigned char>(text[i]);
    if (c0 < 0x80) {
      out.push_back(c0);
      ++i;
      continue;
    }
    int extra;
    Symbol cp;
    Symbol min_cp;
    if ((c0 & 0xe0) == 0xc0) {
      extra = 1;
      cp = c0 & 0x1f;
      min_cp = 0x80;
    } else if ((c0 & 0xf0) == 0xe0) {
      extra = 2;
      cp = c0 & 0x0f;
      min_cp = 0x800;
    } else if ((c0 & 0xf8) == 0xf0) {
      extra = 3;
      cp = c0 & 0x07;
      min_cp = 0x10000;
    } else {
      return false;
    }
    if (i + static_cast<std::size_t>(extra) >= n) return false;  // truncated
    for (int j = 1; j <= extra; ++j) {
      unsigned char cj = static_cast<unsigned char>(text[i + j]);
      if ((cj & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (cj & 0x3f);
    }
    if (cp < min_cp) return false;                      // overlong
    if (cp > 0x10ffff) return false;                    // out of range
    if (cp >= 0xd800 && cp <= 0xdfff) return false;     // surrogate
    out.push_back(cp);
    i += 1 + static_cast<std::size_t>(extra);
  }
  return true;
}

std::string utf8_encode(const std::vector<Symbol>& symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol cp : symbols) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
      out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
  }
  return out;
}

}  // namespace maxrep
