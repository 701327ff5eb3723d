#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maxrep {

// A symbol is a unicode scalar value in text mode or a raw byte in byte mode.
using Symbol = std::uint32_t;

// 1-based position into a Seq. 0 and size()+1 act as left/right sentinels.
using Index = std::int64_t;

/// Immutable symbol sequence with 1-based indexing.
///
/// Interval views follow the usual closed/open conventions:
///   closed(i,j)     = S[i..j]
///   right_open(i,j) = S[i..j-1]
///   left_open(i,j)  = S[i+1..j]
///   open(i,j)       = S[i+1..j-1]
/// Bounds are clamped to [1, n]; any view whose effective lower bound
/// exceeds its upper bound is the empty sequence.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  // Decodes UTF-8 text; throws BadEncoding on malformed input.
  static Seq from_utf8(std::string_view text);
  // Each byte is one symbol.
  static Seq from_bytes(std::string_view bytes);
  // sigma repeated `count` times.
  static Seq repeated(Symbol sigma, std::size_t count);

  Index size() const { return static_cast<Index>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }

  // 1-based access, valid exactly for 1 <= i <= size().
  Symbol at(Index i) const { return symbols_[static_cast<std::size_t>(i - 1)]; }

  Seq closed(Index lo, Index hi) const;
  Seq right_open(Index lo, Index hi) const { return closed(lo, hi - 1); }
  Seq left_open(Index lo, Index hi) const { return closed(lo + 1, hi); }
  Seq open(Index lo, Index hi) const { return closed(lo + 1, hi - 1); }

  Seq repeat(std::size_t k) const;

  std::size_t count(Symbol sigma) const;

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::string to_utf8() const;
  std::string to_bytes() const;  // throws BadEncoding if a symbol exceeds 0xff

  bool operator==(const Seq&) const = default;

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

 private:
  std::vector<Symbol> symbols_;
};

Seq operator+(const Seq& a, const Seq& b);

// Two-pointer subsequence test: pattern is a subsequence of host.
bool is_subsequence(const Seq& pattern, const Seq& host);

// UTF-8 helpers shared by Seq and the CLI.
bool utf8_decode(std::string_view text, std::vector<Symbol>& out);
std::string utf8_encode(const std::vector<Symbol>& symbols);

}  // namespace maxrep
