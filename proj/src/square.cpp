#include "maxrep/square.hpp"

#include <cassert>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"
#include "maxrep/mcs.hpp"
#include "maxrep/occ_index.hpp"

namespace maxrep {

namespace {

std::vector<Index> sigma_positions_checked(const Seq& s, Symbol sigma) {
  std::vector<Index> pos = occ_positions(s, sigma);
  if (pos.size() < 2) {
    throw SymbolTooRare("pivot symbol occurs fewer than twice");
  }
  return pos;
}

}  // namespace

Seq compute_x1(const Seq& s, Symbol sigma) {
  const std::vector<Index> pos = sigma_positions_checked(s, sigma);
  const std::size_t ell = pos.size();
  const std::size_t e = ell / 2;
  const Index i1 = pos[0];
  const Index ie1 = pos[e];  // i_{e+1}

  Seq y = mkcs_constrained(
      {{s.right_open(i1, ie1), s.closed(ie1, s.size())}, Seq::repeated(sigma, e)});

  if (ell % 2 == 1) {
    const Index ie2 = pos[e + 1];  // i_{e+2}
    if (is_subsequence(y, s.closed(ie2, s.size()))) {
      y = mkcs_constrained({{s.right_open(i1, ie2), s.closed(ie2, s.size())}, y});
    }
  }
  return y;
}

std::optional<Index> leftmost_anchor(const Seq& s, const Seq& y, Index i_t) {
  if (y.empty()) return i_t;
  if (s.at(i_t) != y.at(1)) {
    throw AnchorMismatch("anchor position does not carry the first symbol of Y");
  }
  auto e = leftmost_embedding(y, s, i_t - 1);
  if (!e) return std::nullopt;
  return e->indices.back();
}

Seq compute_x2(const Seq& s, const Seq& y, Symbol sigma) {
  const std::vector<Index> pos = sigma_positions_checked(s, sigma);
  const std::size_t ell = pos.size();

  auto j1 = leftmost_anchor(s, y, pos[0]);
  if (!j1) {
    throw PipelineInvariantViolated("first anchor of Y is missing");
  }
  Seq z = mkcs_constrained(
      {{s.closed(1, *j1), s.left_open(*j1, s.size())}, y});

  if (ell % 2 == 1) {
    auto j2 = leftmost_anchor(s, y, pos[1]);
    if (!j2) {
      throw PipelineInvariantViolated("second anchor of Y is missing");
    }
    if (is_subsequence(z, s.left_open(*j2, s.size()))) {
      z = mkcs_constrained(
          {{s.closed(1, *j2), s.left_open(*j2, s.size())}, z});
    }
  }
  return z;
}

SquarePipelineState square_pipeline_state(const Seq& s, Symbol sigma) {
  SquarePipelineState st;
  st.sigma = sigma;
  st.sigma_positions = sigma_positions_checked(s, sigma);
  st.ell = st.sigma_positions.size();
  st.e = st.ell / 2;
  st.y_half = compute_x1(s, sigma);
  auto j1 = leftmost_anchor(s, st.y_half, st.sigma_positions[0]);
  if (!j1) throw PipelineInvariantViolated("first anchor of Y is missing");
  st.anchor_j1 = *j1;
  if (st.ell % 2 == 1) {
    st.anchor_j2 = leftmost_anchor(s, st.y_half, st.sigma_positions[1]);
  }
  return st;
}

KRepResult maximal_square_subsequence(const Seq& s) {
  OccIndex occ(s);
  // Any symbol that repeats works; take the smallest such symbol so runs are
  // reproducible.
  std::optional<Symbol> sigma;
  for (Symbol c : occ.alphabet()) {
    if (occ.count(c) >= 2) {
      sigma = c;
      break;
    }
  }
  if (!sigma) {
    return make_k_rep_result(s, Seq(), 2, std::nullopt, Seq(), Seq());
  }
  Seq y = compute_x1(s, *sigma);
  Seq z = compute_x2(s, y, *sigma);

  // Decompose the half around its first pivot occurrence.
  Index first = 0;
  for (Index i = 1; i <= z.size(); ++i) {
    if (z.at(i) == *sigma) {
      first = i;
      break;
    }
  }
  assert(first > 0);
  return make_k_rep_result(s, z, 2, sigma, z.right_open(1, first),
                           z.left_open(first, z.size()));
}

}  // namespace maxrep
