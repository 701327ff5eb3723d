#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "maxrep/occ_index.hpp"
#include "maxrep/result.hpp"
#include "maxrep/seq.hpp"

namespace maxrep {

// Exact binomial coefficient; throws std::overflow_error when the value
// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Streams every (dividers+1)-tuple of nonnegative integers summing to
/// `total`, exactly once, lexicographically ascending (the order of the
/// recursive expansion with the first coordinate ascending). O(dividers)
/// work per step, O(dividers) memory; tuples are never materialized in bulk.
/// Single-consumer: iterators own their state and must not be shared
/// mid-iteration.
class DivisionRange {
 public:
  DivisionRange(std::size_t total, std::size_t dividers)
      : total_(total), dividers_(dividers) {}

  class iterator {
   public:
    using value_type = std::vector<std::size_t>;
    using difference_type = std::ptrdiff_t;

    iterator() : done_(true) {}
    iterator(std::size_t total, std::size_t dividers);

    const value_type& operator*() const { return cells_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    value_type cells_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(total_, dividers_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t total_;
  std::size_t dividers_;
};

// All ways to split `total` indistinguishable items into dividers+1 bins.
inline DivisionRange enum_divisions(std::size_t total, std::size_t dividers) {
  return DivisionRange(total, dividers);
}

/// Streams every k-tuple p of sigma-positions such that, with
/// p_{k+1} = n+1, each window S[p_j .. p_{j+1}-1] contains sigma^r. Each
/// tuple is produced exactly once; the total count is binomial(R+k, k) with
/// R = |positions| - k*r. Order follows enum_divisions.
class SigmaStartRange {
 public:
  // Throws TooFewOccurrences when |positions| < k*r. Requires r, k >= 1 and
  // `positions` strictly increasing.
  SigmaStartRange(std::size_t r, std::size_t k, std::vector<Index> positions);

  class iterator {
   public:
    using value_type = std::vector<Index>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const SigmaStartRange* range, DivisionRange::iterator inner);

    const value_type& operator*() const { return start_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t s) const { return inner_ == s; }

   private:
    void materialize();

    const SigmaStartRange* range_ = nullptr;
    DivisionRange::iterator inner_;
    value_type start_;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

  std::size_t r() const { return r_; }
  std::size_t k() const { return k_; }
  std::size_t slack() const { return positions_.size() - k_ * r_; }  // R

 private:
  std::size_t r_;
  std::size_t k_;
  std::vector<Index> positions_;
};

SigmaStartRange enum_sigma_starts(std::size_t r, std::size_t k,
                                  std::vector<Index> sigma_positions);

// True iff prev_pt(A) and next_pt(B) exist at every p_i and consecutive
// blocks stay disjoint: next_pt(S,B,p_i) < prev_pt(S,A,p_{i+1}) for i < k.
// Throws MalformedTuple when p is not strictly increasing over
// sigma-positions.
bool is_sigma_split_point(const IndexedSeq& s, const Seq& a, const Seq& b,
                          Symbol sigma, std::span<const Index> p);

struct ExtendedParts {
  Seq prefix;
  Symbol sigma;
  Seq suffix;

  Seq unit() const { return prefix + Seq::repeated(sigma, 1) + suffix; }
};

// Extends a nonempty k-repeating seed X (containing sigma) to a maximal
// k-repeating subsequence that still contains X. The seed splits as
// A sigma B at its first sigma; every potential block-start tuple is
// scanned and, where the split-point test passes, B then A are grown by
// constrained MCS over the induced blocks.
// Throws EmptySeed, SymbolNotInSeed, NotKRepeating.
ExtendedParts extend_k_rep_parts(const Seq& s, const Seq& x, Symbol sigma,
                                 std::size_t k);

Seq extend_k_rep(const Seq& s, const Seq& x, Symbol sigma, std::size_t k);

// Top-level solver: k = 1 returns S itself; otherwise seeds with
// sigma^{floor(ell/k)} for the most frequent symbol (ties to the smallest)
// and extends. Returns epsilon when no symbol occurs k times.
// Throws InvalidK when k < 1.
KRepResult maximal_k_repeating(const Seq& s, std::size_t k);

}  // namespace maxrep
