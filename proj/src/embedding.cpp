#include "maxrep/embedding.hpp"

#include <cassert>

namespace maxrep {

bool is_embedding_of(const Embedding& e, const Seq& pattern, const Seq& host) {
  if (e.indices.size() != pattern.symbols().size()) return false;
  Index last = 0;
  for (std::size_t t = 0; t < e.indices.size(); ++t) {
    Index i = e.indices[t];
    if (i <= last || i > host.size()) return false;
    if (host.at(i) != pattern.symbols()[t]) return false;
    last = i;
  }
  return true;
}

std::optional<Embedding> leftmost_embedding(const Seq& pattern,
                                            const Seq& host, Index start) {
  assert(start >= 0 && start <= host.size());
  Embedding e;
  e.indices.reserve(pattern.symbols().size());
  Index pos = start;
  for (Symbol c : pattern) {
    ++pos;
    while (pos <= host.size() && host.at(pos) != c) ++pos;
    if (pos > host.size()) return std::nullopt;
    e.indices.push_back(pos);
  }
  return e;
}

std::optional<Embedding> rightmost_embedding(const Seq& pattern,
                                             const Seq& host, Index end) {
  assert(end >= 1 && end <= host.size() + 1);
  const auto& p = pattern.symbols();
  Embedding e;
  e.indices.assign(p.size(), 0);
  Index pos = end;
  for (std::size_t t = p.size(); t-- > 0;) {
    --pos;
    while (pos >= 1 && host.at(pos) != p[t]) --pos;
    if (pos < 1) return std::nullopt;
    e.indices[t] = pos;
  }
  return e;
}

std::optional<Index> next_pt(const IndexedSeq& host, const Seq& x, Index i) {
  assert(i >= 0 && i <= host.seq.size());
  Index pos = i;
  for (Symbol c : x) {
    pos = host.occ.next_after(c, pos);
    if (pos > host.seq.size()) return std::nullopt;
  }
  return pos;
}

std::optional<Index> prev_pt(const IndexedSeq& host, const Seq& x, Index i) {
  assert(i >= 1 && i <= host.seq.size() + 1);
  Index pos = i;
  const auto& p = x.symbols();
  for (std::size_t t = p.size(); t-- > 0;) {
    pos = host.occ.prev_before(p[t], pos);
    if (pos == 0) return std::nullopt;
  }
  return pos;
}

std::vector<Index> occ_positions(const Seq& s, Symbol sigma) {
  std::vector<Index> out;
  for (Index i = 1; i <= s.size(); ++i) {
    if (s.at(i) == sigma) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<Embedding>> k_fold_leftmost_embedding(
    const Seq& host, const Seq& unit, std::size_t k) {
  std::vector<Embedding> blocks;
  blocks.reserve(k);
  Index pos = 0;
  for (std::size_t b = 0; b < k; ++b) {
    auto e = leftmost_embedding(unit, host, pos);
    if (!e) return std::nullopt;
    if (!e->indices.empty()) pos = e->indices.back();
    blocks.push_back(std::move(*e));
  }
  return blocks;
}

}  // namespace maxrep
