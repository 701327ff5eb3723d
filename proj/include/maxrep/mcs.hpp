#pragma once

#include <cstddef>
#include <vector>

#include "maxrep/seq.hpp"

namespace maxrep {

/// A constrained maximal-common-subsequence instance: find a common
/// subsequence of all hosts that contains `constraint` and admits no
/// single-symbol insertion.
struct McsInstance {
  std::vector<Seq> hosts;  // nonempty list; individual hosts may be empty
  Seq constraint;
};

// Deterministic insertion-saturation solver. Scans gaps left to right; at
// each gap repeatedly inserts the smallest symbol that keeps the candidate
// common to every host, then advances. Inserting at later gaps can only
// shrink an earlier gap's feasibility window (the prefix embedding is fixed,
// the suffix embedding moves left), so a gap found infeasible stays
// infeasible and one pass reaches a fixed point: a maximal common
// subsequence containing the constraint.
//
// Throws ConstraintNotCommon when the constraint fails against some host.
Seq mkcs_constrained(const McsInstance& instance);

// Exactly the symbols whose insertion at `gap` (0..|current|) keeps
// `current` a common subsequence of every host, ascending. `current` must
// itself be common to all hosts. Throws GapOutOfRange.
std::vector<Symbol> feasible_insertions(const McsInstance& instance,
                                        const Seq& current, std::size_t gap);

}  // namespace maxrep
