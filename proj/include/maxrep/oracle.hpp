#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "maxrep/embedding.hpp"
#include "maxrep/seq.hpp"

// Brute-force verifiers and small-n exhaustive enumerators. Everything here
// is deliberately simple and independent of the production code paths it
// checks; instance-size guards fail loudly instead of running unboundedly.
namespace maxrep::oracle {

struct KRepCheck {
  bool ok = false;
  std::vector<Embedding> blocks;  // leftmost witness when ok
  // On failure: 1-based copy number and offset within the unit where the
  // greedy match ran out of input.
  std::size_t fail_copy = 0;
  std::size_t fail_offset = 0;
};

// Greedy two-pointer test of x^k against s (repeat-then-match; does not use
// the occurrence tables).
KRepCheck check_k_repeating(const Seq& s, const Seq& x, std::size_t k);

struct MaximalityVerdict {
  bool is_valid = false;
  bool is_maximal = false;
  // (gap in 0..|x|, symbol) whose insertion stays k-repeating. Present iff
  // is_valid && !is_maximal.
  std::optional<std::pair<std::size_t, Symbol>> counterexample;
};

// Single-insertion maximality test: x is maximal iff no insertion of one
// symbol at any gap keeps x^k a subsequence of s. Sound because k-repeating
// subsequences are downward closed, so any proper k-repeating supersequence
// of x contains a one-symbol extension of x.
// Throws NotKRepeating when x^k is not a subsequence of s.
MaximalityVerdict check_maximal_k_rep(const Seq& s, const Seq& x,
                                      std::size_t k);

// All k-subsets of the sigma-positions satisfying the start conditions
// verbatim (each window S[p_j .. p_{j+1}-1] contains sigma^r, with
// p_{k+1} = n+1). Guarded: binomial(occ, k) <= 1e6, else InstanceTooLarge.
std::set<std::vector<Index>> brute_sigma_starts(const Seq& s, Symbol sigma,
                                                std::size_t r, std::size_t k);

// Every distinct subsequence of s, ascending; guarded to |s| <= 20.
std::vector<Seq> all_distinct_subsequences(const Seq& s);

// The set of all maximal k-repeating subsequences of s, by full subset
// enumeration. Guards: |s| <= 14 for k <= 2, |s| <= 12 for k >= 3.
std::vector<Seq> brute_all_maximal(const Seq& s, std::size_t k);

bool contains_seq(const std::vector<Seq>& set, const Seq& x);

struct McsVerdict {
  bool contains_constraint = false;
  bool common = false;
  bool maximal = false;
  std::optional<std::size_t> failing_host;
  std::optional<std::pair<std::size_t, Symbol>> counterexample;

  bool valid() const { return contains_constraint && common; }
  bool ok() const { return valid() && maximal; }
};

McsVerdict verify_mcs_output(const std::vector<Seq>& hosts,
                             const Seq& constraint, const Seq& m);

// Length of a longest square subsequence: 2 * max over cut points of
// LCS(prefix, suffix). Guarded to |s| <= 600.
std::size_t lss_oracle(const Seq& s);

// Square extendability probes on the half y.
bool right_extendable(const Seq& s, const Seq& y);
bool left_extendable(const Seq& s, const Seq& y);
bool inner_extendable(const Seq& s, const Seq& y);

}  // namespace maxrep::oracle
