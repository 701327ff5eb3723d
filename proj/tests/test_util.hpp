#pragma once

#include <random>
#include <vector>

#include "maxrep/seq.hpp"

namespace testutil {

using maxrep::Index;
using maxrep::Seq;
using maxrep::Symbol;

inline Seq seq(const char* text) { return Seq::from_utf8(text); }

inline Seq random_seq_len(std::mt19937_64& rng, std::size_t len,
                          int alphabet) {
  std::vector<Symbol> s(len);
  for (auto& c : s) {
    c = 'a' + static_cast<Symbol>(rng() % static_cast<std::uint64_t>(alphabet));
  }
  return Seq(std::move(s));
}

inline Seq random_seq(std::mt19937_64& rng, std::size_t max_len,
                      int alphabet) {
  return random_seq_len(rng, rng() % (max_len + 1), alphabet);
}

inline Seq random_subsequence(std::mt19937_64& rng, const Seq& s,
                              int keep_percent = 50) {
  std::vector<Symbol> out;
  for (Symbol c : s) {
    if (static_cast<int>(rng() % 100) < keep_percent) out.push_back(c);
  }
  return Seq(std::move(out));
}

// Random supersequence of s: up to max_extra symbols spliced in.
inline Seq random_supersequence(std::mt19937_64& rng, const Seq& s,
                                std::size_t max_extra, int alphabet) {
  std::vector<Symbol> out(s.begin(), s.end());
  std::size_t extra = rng() % (max_extra + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t at = rng() % (out.size() + 1);
    Symbol c =
        'a' + static_cast<Symbol>(rng() % static_cast<std::uint64_t>(alphabet));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), c);
  }
  return Seq(std::move(out));
}

}  // namespace testutil
