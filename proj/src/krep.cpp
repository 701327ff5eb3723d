#include "maxrep/krep.hpp"

#include <cassert>
#include <stdexcept>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"
#include "maxrep/mcs.hpp"

namespace maxrep {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact division at every step
    if (result > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

DivisionRange::iterator::iterator(std::size_t total, std::size_t dividers) {
  cells_.assign(dividers + 1, 0);
  cells_.back() = total;
}

DivisionRange::iterator& DivisionRange::iterator::operator++() {
  assert(!done_);
  // Lexicographic successor: bump the rightmost cell (other than the last)
  // that still has mass to its right, then push the remainder to the end.
  const std::size_t d = cells_.size() - 1;
  std::size_t tail = cells_[d];
  for (std::size_t j = d; j-- > 0;) {
    if (tail > 0) {
      ++cells_[j];
      for (std::size_t t = j + 1; t < d; ++t) cells_[t] = 0;
      cells_[d] = tail - 1;
      return *this;
    }
    tail += cells_[j];
  }
  done_ = true;
  return *this;
}

SigmaStartRange::SigmaStartRange(std::size_t r, std::size_t k,
                                 std::vector<Index> positions)
    : r_(r), k_(k), positions_(std::move(positions)) {
  assert(r_ >= 1 && k_ >= 1);
  if (positions_.size() < k_ * r_) {
    throw TooFewOccurrences("need at least k*r occurrences of sigma");
  }
}

SigmaStartRange::iterator::iterator(const SigmaStartRange* range,
                                    DivisionRange::iterator inner)
    : range_(range), inner_(std::move(inner)) {
  if (!(inner_ == std::default_sentinel)) materialize();
}

void SigmaStartRange::iterator::materialize() {
  const auto& sol = *inner_;
  start_.assign(range_->k_, 0);
  std::size_t acc = 0;
  for (std::size_t t = 0; t < range_->k_; ++t) {
    acc += sol[t];
    // occurrence number (t)*r + acc, zero-based into the position list
    start_[t] = range_->positions_[t * range_->r_ + acc];
  }
}

SigmaStartRange::iterator& SigmaStartRange::iterator::operator++() {
  ++inner_;
  if (!(inner_ == std::default_sentinel)) materialize();
  return *this;
}

SigmaStartRange::iterator SigmaStartRange::begin() const {
  return iterator(this, DivisionRange(slack(), k_).begin());
}

SigmaStartRange enum_sigma_starts(std::size_t r, std::size_t k,
                                  std::vector<Index> sigma_positions) {
  return SigmaStartRange(r, k, std::move(sigma_positions));
}

bool is_sigma_split_point(const IndexedSeq& s, const Seq& a, const Seq& b,
                          Symbol sigma, std::span<const Index> p) {
  Index last = 0;
  for (Index pi : p) {
    if (pi <= last || pi > s.seq.size() || s.seq.at(pi) != sigma) {
      throw MalformedTuple(
          "tuple is not strictly increasing over sigma-positions");
    }
    last = pi;
  }
  const std::size_t k = p.size();
  std::optional<Index> next_b_prev;
  for (std::size_t i = 0; i < k; ++i) {
    auto nb = next_pt(s, b, p[i]);
    auto pa = prev_pt(s, a, p[i]);
    if (!nb || !pa) return false;
    if (i > 0 && *next_b_prev >= *pa) return false;
    next_b_prev = nb;
  }
  return true;
}

namespace {

Index first_occurrence(const Seq& x, Symbol sigma) {
  for (Index i = 1; i <= x.size(); ++i) {
    if (x.at(i) == sigma) return i;
  }
  return 0;
}

}  // namespace

ExtendedParts extend_k_rep_parts(const Seq& s, const Seq& x, Symbol sigma,
                                 std::size_t k) {
  if (k < 1) throw InvalidK("k must be at least 1");
  if (x.empty()) throw EmptySeed("seed is empty");
  const Index pivot = first_occurrence(x, sigma);
  if (pivot == 0) throw SymbolNotInSeed("sigma does not occur in the seed");
  if (!k_fold_leftmost_embedding(s, x, k)) {
    throw NotKRepeating("seed repeated k times is not a subsequence");
  }

  const IndexedSeq host(s);
  Seq a = x.right_open(1, pivot);       // sigma-free by choice of pivot
  Seq b = x.left_open(pivot, x.size());
  const std::size_t r = x.count(sigma);
  const Index n = s.size();

  for (const auto& alpha :
       enum_sigma_starts(r, k, host.occ.positions(sigma))) {
    if (!is_sigma_split_point(host, a, b, sigma, alpha)) continue;

    // Right blocks: each copy of B must fit between its pivot and the point
    // where the next copy's prefix A begins.
    std::vector<Seq> right_blocks;
    right_blocks.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      // The split-point test guarantees these prev/next probes succeed.
      Index end = i + 1 < k ? prev_pt(host, a, alpha[i + 1]).value() : n + 1;
      right_blocks.push_back(s.open(alpha[i], end));
    }
    b = mkcs_constrained({std::move(right_blocks), b});

    // Left blocks, bounded by where the previous copy's new suffix B ends.
    std::vector<Seq> left_blocks;
    left_blocks.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      Index begin = i > 0 ? next_pt(host, b, alpha[i - 1]).value() : 0;
      left_blocks.push_back(s.open(begin, alpha[i]));
    }
    a = mkcs_constrained({std::move(left_blocks), a});
  }
  return {std::move(a), sigma, std::move(b)};
}

Seq extend_k_rep(const Seq& s, const Seq& x, Symbol sigma, std::size_t k) {
  return extend_k_rep_parts(s, x, sigma, k).unit();
}

KRepResult maximal_k_repeating(const Seq& s, std::size_t k) {
  if (k < 1) throw InvalidK("k must be at least 1");
  if (k == 1) {
    return make_k_rep_result(s, s, 1, std::nullopt, Seq(), Seq());
  }
  OccIndex occ(s);
  auto sigma = most_frequent_symbol(occ, k);
  if (!sigma) {
    return make_k_rep_result(s, Seq(), k, std::nullopt, Seq(), Seq());
  }
  const std::size_t ell = occ.count(*sigma);
  const Seq seed = Seq::repeated(*sigma, ell / k);
  ExtendedParts parts = extend_k_rep_parts(s, seed, *sigma, k);
  Seq unit = parts.unit();
  return make_k_rep_result(s, std::move(unit), k, *sigma,
                           std::move(parts.prefix), std::move(parts.suffix));
}

}  // namespace maxrep
