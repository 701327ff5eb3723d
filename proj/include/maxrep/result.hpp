#pragma once

#include <optional>
#include <vector>

#include "maxrep/embedding.hpp"
#include "maxrep/seq.hpp"

namespace maxrep {

/// Final answer of a maximal-repeat computation: the repeating unit together
/// with a k-fold alignment witness. When `sigma` is set the unit decomposes
/// as prefix + sigma + suffix around the pivot occurrence.
struct KRepResult {
  Seq unit;  // the full answer is unit repeated k times
  Seq prefix;
  Seq suffix;
  std::optional<Symbol> sigma;
  std::size_t k = 1;
  std::vector<Embedding> witness;  // k blocks, each spelling `unit`
  bool verified = false;           // witness checked against the input
};

// Builds the chained leftmost witness and sets `verified`. An empty unit
// yields k empty blocks and verifies trivially.
KRepResult make_k_rep_result(const Seq& input, Seq unit, std::size_t k,
                             std::optional<Symbol> sigma, Seq prefix,
                             Seq suffix);

}  // namespace maxrep
