#include "maxrep/occ_index.hpp"

#include <algorithm>
#include <cassert>

namespace maxrep {

namespace {
// Dense tables are worthwhile only while the footprint stays modest.
constexpr std::size_t kDenseEntryCap = std::size_t{1} << 24;

const std::vector<Index> kEmptyPositions{};
}  // namespace

OccIndex::OccIndex(const Seq& s, Policy policy) : n_(s.size()) {
  alphabet_.assign(s.begin(), s.end());
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());

  const std::size_t m = alphabet_.size();
  positions_.assign(m, {});
  for (Index i = 1; i <= n_; ++i) {
    positions_[static_cast<std::size_t>(sym_id(s.at(i)))].push_back(i);
  }

  const std::size_t rows = static_cast<std::size_t>(n_) + 2;
  switch (policy) {
    case Policy::Dense:
      dense_ = m > 0;
      break;
    case Policy::Binary:
      dense_ = false;
      break;
    case Policy::Auto:
      dense_ = m > 0 && rows * m <= kDenseEntryCap;
      break;
  }
  if (!dense_) return;

  next_tab_.assign((static_cast<std::size_t>(n_) + 1) * m, 0);
  prev_tab_.assign((static_cast<std::size_t>(n_) + 1) * m, 0);
  // next_tab_ row i (0..n): smallest j > i per symbol, n+1 when none.
  {
    std::vector<std::int32_t> cur(m, static_cast<std::int32_t>(n_ + 1));
    for (Index i = n_; i >= 0; --i) {
      if (i + 1 <= n_) {
        cur[static_cast<std::size_t>(sym_id(s.at(i + 1)))] =
            static_cast<std::int32_t>(i + 1);
      }
      std::copy(cur.begin(), cur.end(),
                next_tab_.begin() + static_cast<std::size_t>(i) * m);
    }
  }
  // prev_tab_ row i (1..n+1, stored at i-1): largest j < i per symbol, 0 when none.
  {
    std::vector<std::int32_t> cur(m, 0);
    for (Index i = 1; i <= n_ + 1; ++i) {
      if (i - 1 >= 1) {
        cur[static_cast<std::size_t>(sym_id(s.at(i - 1)))] =
            static_cast<std::int32_t>(i - 1);
      }
      std::copy(cur.begin(), cur.end(),
                prev_tab_.begin() + static_cast<std::size_t>(i - 1) * m);
    }
  }
}

int OccIndex::sym_id(Symbol sigma) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), sigma);
  if (it == alphabet_.end() || *it != sigma) return -1;
  return static_cast<int>(it - alphabet_.begin());
}

const std::vector<Index>& OccIndex::positions(Symbol sigma) const {
  int id = sym_id(sigma);
  if (id < 0) return kEmptyPositions;
  return positions_[static_cast<std::size_t>(id)];
}

Index OccIndex::next_after(Symbol sigma, Index i) const {
  assert(i >= 0 && i <= n_);
  int id = sym_id(sigma);
  if (id < 0) return n_ + 1;
  if (dense_) {
    return next_tab_[static_cast<std::size_t>(i) * alphabet_.size() +
                     static_cast<std::size_t>(id)];
  }
  const auto& pos = positions_[static_cast<std::size_t>(id)];
  auto it = std::upper_bound(pos.begin(), pos.end(), i);
  return it == pos.end() ? n_ + 1 : *it;
}

Index OccIndex::prev_before(Symbol sigma, Index i) const {
  assert(i >= 1 && i <= n_ + 1);
  int id = sym_id(sigma);
  if (id < 0) return 0;
  if (dense_) {
    return prev_tab_[static_cast<std::size_t>(i - 1) * alphabet_.size() +
                     static_cast<std::size_t>(id)];
  }
  const auto& pos = positions_[static_cast<std::size_t>(id)];
  auto it = std::lower_bound(pos.begin(), pos.end(), i);
  return it == pos.begin() ? 0 : *(it - 1);
}

std::optional<Symbol> most_frequent_symbol(const OccIndex& occ,
                                           std::size_t min_count) {
  std::optional<Symbol> best;
  std::size_t best_count = 0;
  for (Symbol sigma : occ.alphabet()) {
    std::size_t c = occ.count(sigma);
    if (c >= min_count && c > best_count) {
      best = sigma;
      best_count = c;
    }
  }
  return best;
}

}  // namespace maxrep
