#pragma once

#include <optional>
#include <vector>

#include "maxrep/result.hpp"
#include "maxrep/seq.hpp"

namespace maxrep {

/// Intermediate quantities of the square pipeline for one pivot symbol.
struct SquarePipelineState {
  Symbol sigma;
  std::size_t ell;  // occurrences of sigma
  std::size_t e;    // ell / 2
  std::vector<Index> sigma_positions;
  Seq y_half;                      // X1 = y_half twice
  Index anchor_j1 = 0;             // leftmost anchor of y_half at i1
  std::optional<Index> anchor_j2;  // at i2, only when ell is odd
};

// First stage: a half Y with sigma^e <= Y, Y[1] = sigma, YY a subsequence of
// S, and YY neither right- nor inner-extendable. Throws SymbolTooRare when
// sigma occurs fewer than twice.
Seq compute_x1(const Seq& s, Symbol sigma);

// Smallest j with y a subsequence of s[i_t..j]; nullopt when y does not fit
// in s[i_t..n]. Requires s[i_t] == y[1] (AnchorMismatch otherwise).
std::optional<Index> leftmost_anchor(const Seq& s, const Seq& y, Index i_t);

// Second stage: extends y to a half Z with ZZ a maximal square subsequence
// containing YY. Throws PipelineInvariantViolated if the first anchor is
// missing (cannot happen for a compute_x1 output).
Seq compute_x2(const Seq& s, const Seq& y, Symbol sigma);

// Full pipeline with deterministic pivot choice (most frequent symbol, ties
// to the smallest). Returns epsilon with a trivially-true witness when no
// symbol repeats.
KRepResult maximal_square_subsequence(const Seq& s);

// Runs the first stage and anchor computation; introspection for tests and
// fixtures.
SquarePipelineState square_pipeline_state(const Seq& s, Symbol sigma);

}  // namespace maxrep
