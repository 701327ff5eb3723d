#pragma once

#include <optional>
#include <vector>

#include "maxrep/occ_index.hpp"
#include "maxrep/seq.hpp"

namespace maxrep {

/// Strictly increasing 1-based index list witnessing one sequence as a
/// subsequence of another.
struct Embedding {
  std::vector<Index> indices;

  std::size_t size() const { return indices.size(); }
  bool operator==(const Embedding&) const = default;
};

// True when `e` maps pattern onto host: strictly increasing indices with
// host[e[t]] == pattern[t].
bool is_embedding_of(const Embedding& e, const Seq& pattern, const Seq& host);

// Lexicographically smallest index list embedding pattern into
// host(start..|host|], i.e. matching begins strictly after `start`.
// Empty pattern gives the empty embedding. Requires 0 <= start <= |host|.
std::optional<Embedding> leftmost_embedding(const Seq& pattern,
                                            const Seq& host, Index start);

// Lexicographically largest index list embedding pattern into host[1..end-1],
// i.e. matching ends strictly before `end`. Requires 1 <= end <= |host|+1.
std::optional<Embedding> rightmost_embedding(const Seq& pattern,
                                             const Seq& host, Index end);

// Smallest j >= i such that host(i..j] contains x; next_pt(ε) = i.
// Requires 0 <= i <= |host|. O(|x|) via the occurrence tables.
std::optional<Index> next_pt(const IndexedSeq& host, const Seq& x, Index i);

// Largest l <= i such that host[l..i) contains x; prev_pt(ε) = i.
// Requires 1 <= i <= |host|+1.
std::optional<Index> prev_pt(const IndexedSeq& host, const Seq& x, Index i);

// Ascending positions of sigma in s.
std::vector<Index> occ_positions(const Seq& s, Symbol sigma);

// Chains k leftmost embeddings of `unit`, each block starting after the
// previous block's last index; nullopt when unit^k is not a subsequence.
std::optional<std::vector<Embedding>> k_fold_leftmost_embedding(
    const Seq& host, const Seq& unit, std::size_t k);

}  // namespace maxrep
