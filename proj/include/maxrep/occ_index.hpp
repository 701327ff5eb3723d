#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxrep/seq.hpp"

namespace maxrep {

/// Per-symbol occurrence positions over a Seq plus next/previous-occurrence
/// lookups. next_after/prev_before answer in O(1) via dense tables when the
/// (n+2) x |alphabet| footprint is small, otherwise by binary search over the
/// per-symbol position lists; the contract is identical either way.
class OccIndex {
 public:
  enum class Policy { Auto, Dense, Binary };

  explicit OccIndex(const Seq& s, Policy policy = Policy::Auto);

  Index length() const { return n_; }

  // Symbols present in the sequence, ascending.
  const std::vector<Symbol>& alphabet() const { return alphabet_; }

  // Ascending positions of sigma; empty when absent.
  const std::vector<Index>& positions(Symbol sigma) const;

  std::size_t count(Symbol sigma) const { return positions(sigma).size(); }

  // Smallest j > i with S[j] = sigma, or n+1 when none. Valid for 0 <= i <= n.
  Index next_after(Symbol sigma, Index i) const;

  // Largest j < i with S[j] = sigma, or 0 when none. Valid for 1 <= i <= n+1.
  Index prev_before(Symbol sigma, Index i) const;

  Index none_next() const { return n_ + 1; }
  static constexpr Index none_prev = 0;

 private:
  int sym_id(Symbol sigma) const;

  Index n_ = 0;
  std::vector<Symbol> alphabet_;                 // sorted
  std::vector<std::vector<Index>> positions_;    // aligned with alphabet_
  bool dense_ = false;
  // Dense layout: row i holds one entry per alphabet id.
  std::vector<std::int32_t> next_tab_;           // rows 0..n
  std::vector<std::int32_t> prev_tab_;           // rows 1..n+1 stored at i-1
};

/// A Seq bundled with its OccIndex; the shape most operations consume.
struct IndexedSeq {
  Seq seq;
  OccIndex occ;

  explicit IndexedSeq(Seq s) : seq(std::move(s)), occ(seq) {}
};

// Most frequent symbol with at least min_count occurrences, ties broken by
// smallest symbol; nullopt when no symbol qualifies.
std::optional<Symbol> most_frequent_symbol(const OccIndex& occ,
                                           std::size_t min_count);

}  // namespace maxrep
