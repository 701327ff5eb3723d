#include "maxrep/mcs.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"
#include "maxrep/occ_index.hpp"

namespace maxrep {

namespace {

// Saturation state for one host: the leftmost embedding end of the current
// prefix M[1..g] and, aligned with M, the rightmost embedding of each suffix
// M[t..] (suffix_pos[t-1] is where M[t] lands; entries before the cursor are
// stale but never read).
struct HostState {
  const Seq* seq;
  OccIndex occ;
  Index prefix_end = 0;
  std::vector<Index> suffix_pos;

  explicit HostState(const Seq& s) : seq(&s), occ(s) {}

  Index suffix_start(std::size_t gap, std::size_t m) const {
    return gap < m ? suffix_pos[gap] : seq->size() + 1;
  }
};

// Symbols present in every host, ascending; no other symbol can ever be
// inserted.
std::vector<Symbol> common_alphabet(const std::vector<Seq>& hosts,
                                    const std::vector<HostState>& states) {
  std::vector<Symbol> out = states[0].occ.alphabet();
  for (std::size_t h = 1; h < hosts.size() && !out.empty(); ++h) {
    const auto& alpha = states[h].occ.alphabet();
    std::vector<Symbol> merged;
    std::set_intersection(out.begin(), out.end(), alpha.begin(), alpha.end(),
                          std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

void validate_instance(const McsInstance& instance) {
  if (instance.hosts.empty()) {
    throw Error("MCS instance needs at least one host");
  }
  for (std::size_t h = 0; h < instance.hosts.size(); ++h) {
    if (!is_subsequence(instance.constraint, instance.hosts[h])) {
      throw ConstraintNotCommon(
          h, "constraint is not a subsequence of host " + std::to_string(h));
    }
  }
}

}  // namespace

Seq mkcs_constrained(const McsInstance& instance) {
  validate_instance(instance);
  std::vector<Symbol> m = instance.constraint.symbols();

  std::vector<HostState> states;
  states.reserve(instance.hosts.size());
  for (const Seq& host : instance.hosts) {
    HostState st(host);
    auto rm = rightmost_embedding(instance.constraint, host, host.size() + 1);
    assert(rm.has_value());
    st.suffix_pos = std::move(rm->indices);
    states.push_back(std::move(st));
  }

  const std::vector<Symbol> candidates =
      common_alphabet(instance.hosts, states);

  std::size_t gap = 0;
  while (true) {
    // Saturate the current gap: insert the smallest feasible symbol until
    // none fits. A symbol fits when every host has an occurrence strictly
    // between its prefix end and its suffix start.
    bool inserted = true;
    while (inserted) {
      inserted = false;
      for (Symbol c : candidates) {
        bool ok = true;
        for (const HostState& st : states) {
          Index nxt = st.occ.next_after(c, st.prefix_end);
          if (nxt >= st.suffix_start(gap, m.size())) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (HostState& st : states) {
          Index at = st.occ.prev_before(c, st.suffix_start(gap, m.size()));
          assert(at > st.prefix_end);
          st.suffix_pos.insert(
              st.suffix_pos.begin() + static_cast<std::ptrdiff_t>(gap), at);
        }
        m.insert(m.begin() + static_cast<std::ptrdiff_t>(gap), c);
        inserted = true;
        break;
      }
    }
    if (gap == m.size()) break;
    for (HostState& st : states) {
      st.prefix_end = st.occ.next_after(m[gap], st.prefix_end);
      if (st.prefix_end > st.seq->size()) {
        throw Error("internal: candidate lost commonality during saturation");
      }
    }
    ++gap;
  }
  return Seq(std::move(m));
}

std::vector<Symbol> feasible_insertions(const McsInstance& instance,
                                        const Seq& current, std::size_t gap) {
  validate_instance(instance);
  if (gap > current.symbols().size()) {
    throw GapOutOfRange("gap " + std::to_string(gap) + " exceeds |current| = " +
                        std::to_string(current.symbols().size()));
  }
  const Seq prefix = current.closed(1, static_cast<Index>(gap));
  const Seq suffix =
      current.closed(static_cast<Index>(gap) + 1, current.size());

  struct Window {
    OccIndex occ;
    Index lo;  // prefix end (exclusive)
    Index hi;  // suffix start (exclusive)
  };
  std::vector<Window> windows;
  for (const Seq& host : instance.hosts) {
    auto lm = leftmost_embedding(prefix, host, 0);
    auto rm = rightmost_embedding(suffix, host, host.size() + 1);
    if (!lm || !rm) {
      throw Error("current is not a common subsequence of every host");
    }
    Index lo = lm->indices.empty() ? 0 : lm->indices.back();
    Index hi = rm->indices.empty() ? host.size() + 1 : rm->indices.front();
    windows.push_back({OccIndex(host), lo, hi});
  }

  std::vector<Symbol> symbols = windows[0].occ.alphabet();
  for (std::size_t h = 1; h < windows.size() && !symbols.empty(); ++h) {
    const auto& alpha = windows[h].occ.alphabet();
    std::vector<Symbol> merged;
    std::set_intersection(symbols.begin(), symbols.end(), alpha.begin(),
                          alpha.end(), std::back_inserter(merged));
    symbols = std::move(merged);
  }

  std::vector<Symbol> out;
  for (Symbol c : symbols) {
    bool ok = true;
    for (const Window& w : windows) {
      if (w.occ.next_after(c, w.lo) >= w.hi) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace maxrep
