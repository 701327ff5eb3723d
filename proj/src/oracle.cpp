#include "maxrep/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "maxrep/errors.hpp"
#include "maxrep/krep.hpp"
#include "maxrep/occ_index.hpp"

namespace maxrep::oracle {

KRepCheck check_k_repeating(const Seq& s, const Seq& x, std::size_t k) {
  KRepCheck out;
  const auto& unit = x.symbols();
  std::vector<Index> matched;
  matched.reserve(unit.size() * k);
  std::size_t copy = 0;   // completed copies
  std::size_t off = 0;    // next offset within the unit
  if (unit.empty()) copy = k;
  for (Index i = 1; i <= s.size() && copy < k; ++i) {
    if (s.at(i) != unit[off]) continue;
    matched.push_back(i);
    if (++off == unit.size()) {
      off = 0;
      ++copy;
    }
  }
  if (copy < k) {
    out.fail_copy = copy + 1;
    out.fail_offset = off + 1;
    return out;
  }
  out.ok = true;
  out.blocks.reserve(k);
  for (std::size_t b = 0; b < k; ++b) {
    Embedding e;
    e.indices.assign(matched.begin() + static_cast<std::ptrdiff_t>(b * unit.size()),
                     matched.begin() + static_cast<std::ptrdiff_t>((b + 1) * unit.size()));
    out.blocks.push_back(std::move(e));
  }
  return out;
}

MaximalityVerdict check_maximal_k_rep(const Seq& s, const Seq& x,
                                      std::size_t k) {
  if (!check_k_repeating(s, x, k).ok) {
    throw NotKRepeating("candidate repeated k times is not a subsequence");
  }
  MaximalityVerdict v;
  v.is_valid = true;
  OccIndex occ(s);
  const auto& sym = x.symbols();
  for (std::size_t gap = 0; gap <= sym.size(); ++gap) {
    for (Symbol c : occ.alphabet()) {
      std::vector<Symbol> extended;
      extended.reserve(sym.size() + 1);
      extended.insert(extended.end(), sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(gap));
      extended.push_back(c);
      extended.insert(extended.end(), sym.begin() + static_cast<std::ptrdiff_t>(gap), sym.end());
      if (check_k_repeating(s, Seq(std::move(extended)), k).ok) {
        v.is_maximal = false;
        v.counterexample = {gap, c};
        return v;
      }
    }
  }
  v.is_maximal = true;
  return v;
}

std::set<std::vector<Index>> brute_sigma_starts(const Seq& s, Symbol sigma,
                                                std::size_t r, std::size_t k) {
  const std::vector<Index> pos = occ_positions(s, sigma);
  bool too_big = false;
  try {
    too_big = binomial(pos.size(), k) > 1000000;
  } catch (const std::overflow_error&) {
    too_big = true;
  }
  if (too_big) {
    throw InstanceTooLarge("too many position subsets to enumerate");
  }

  std::set<std::vector<Index>> out;
  if (k == 0 || pos.size() < k) return out;
  const Seq needle = Seq::repeated(sigma, r);

  // All k-subsets of the position list, in index order.
  std::vector<std::size_t> choose(k);
  for (std::size_t i = 0; i < k; ++i) choose[i] = i;
  while (true) {
    std::vector<Index> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = pos[choose[i]];
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      Index lo = p[j];
      Index hi = (j + 1 < k ? p[j + 1] : s.size() + 1) - 1;
      ok = is_subsequence(needle, s.closed(lo, hi));
    }
    if (ok) out.insert(std::move(p));

    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      if (choose[i] < pos.size() - (k - i)) {
        ++choose[i];
        for (std::size_t t = i + 1; t < k; ++t) choose[t] = choose[t - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

std::vector<Seq> all_distinct_subsequences(const Seq& s) {
  if (s.size() > 20) {
    throw InstanceTooLarge("subset enumeration capped at n = 20");
  }
  std::set<std::vector<Symbol>> seen;
  const auto& sym = s.symbols();
  const std::size_t n = sym.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Symbol> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(sym[i]);
    }
    seen.insert(std::move(sub));
  }
  std::vector<Seq> out;
  out.reserve(seen.size());
  for (auto& v : seen) out.push_back(Seq(v));
  return out;
}

std::vector<Seq> brute_all_maximal(const Seq& s, std::size_t k) {
  const Index cap = k <= 2 ? 14 : 12;
  if (s.size() > cap) {
    throw InstanceTooLarge("exhaustive ground truth capped at n = " +
                           std::to_string(cap));
  }
  std::vector<Seq> repeating;
  for (const Seq& x : all_distinct_subsequences(s)) {
    if (check_k_repeating(s, x, k).ok) repeating.push_back(x);
  }
  // Downward closure makes single-step supersequence membership equivalent
  // to having any proper supersequence in the set.
  std::map<std::size_t, std::vector<const Seq*>> by_len;
  for (const Seq& x : repeating) {
    by_len[static_cast<std::size_t>(x.size())].push_back(&x);
  }
  std::vector<Seq> out;
  for (const Seq& x : repeating) {
    auto it = by_len.find(static_cast<std::size_t>(x.size()) + 1);
    bool extendable = false;
    if (it != by_len.end()) {
      for (const Seq* y : it->second) {
        if (is_subsequence(x, *y)) {
          extendable = true;
          break;
        }
      }
    }
    if (!extendable) out.push_back(x);
  }
  return out;
}

bool contains_seq(const std::vector<Seq>& set, const Seq& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

McsVerdict verify_mcs_output(const std::vector<Seq>& hosts,
                             const Seq& constraint, const Seq& m) {
  McsVerdict v;
  v.contains_constraint = is_subsequence(constraint, m);
  v.common = true;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    if (!is_subsequence(m, hosts[h])) {
      v.common = false;
      v.failing_host = h;
      break;
    }
  }
  if (!v.valid()) return v;

  // Symbols absent from some host can never be inserted.
  std::vector<Symbol> symbols;
  {
    OccIndex first(hosts.empty() ? Seq() : hosts[0]);
    symbols = first.alphabet();
    for (std::size_t h = 1; h < hosts.size() && !symbols.empty(); ++h) {
      OccIndex oi(hosts[h]);
      std::vector<Symbol> merged;
      std::set_intersection(symbols.begin(), symbols.end(),
                            oi.alphabet().begin(), oi.alphabet().end(),
                            std::back_inserter(merged));
      symbols = std::move(merged);
    }
  }
  const auto& sym = m.symbols();
  for (std::size_t gap = 0; gap <= sym.size(); ++gap) {
    for (Symbol c : symbols) {
      std::vector<Symbol> ext;
      ext.reserve(sym.size() + 1);
      ext.insert(ext.end(), sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(gap));
      ext.push_back(c);
      ext.insert(ext.end(), sym.begin() + static_cast<std::ptrdiff_t>(gap), sym.end());
      Seq candidate(std::move(ext));
      bool everywhere = true;
      for (const Seq& host : hosts) {
        if (!is_subsequence(candidate, host)) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) {
        v.maximal = false;
        v.counterexample = {gap, c};
        return v;
      }
    }
  }
  v.maximal = true;
  return v;
}

namespace {

std::size_t lcs_length(const Seq& a, const Seq& b) {
  const auto& x = a.symbols();
  const auto& y = b.symbols();
  std::vector<std::size_t> row(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t up = row[j];
      row[j] = x[i - 1] == y[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[y.size()];
}

}  // namespace

std::size_t lss_oracle(const Seq& s) {
  if (s.size() > 600) {
    throw InstanceTooLarge("square-length oracle capped at n = 600");
  }
  std::size_t best = 0;
  for (Index cut = 1; cut < s.size(); ++cut) {
    best = std::max(best,
                    lcs_length(s.closed(1, cut), s.closed(cut + 1, s.size())));
  }
  return 2 * best;
}

namespace {

bool square_of(const Seq& s, const Seq& half) {
  return check_k_repeating(s, half, 2).ok;
}

}  // namespace

bool right_extendable(const Seq& s, const Seq& y) {
  OccIndex occ(s);
  for (Symbol c : occ.alphabet()) {
    if (square_of(s, y + Seq::repeated(c, 1))) return true;
  }
  return false;
}

bool left_extendable(const Seq& s, const Seq& y) {
  OccIndex occ(s);
  for (Symbol c : occ.alphabet()) {
    if (square_of(s, Seq::repeated(c, 1) + y)) return true;
  }
  return false;
}

bool inner_extendable(const Seq& s, const Seq& y) {
  OccIndex occ(s);
  for (Index split = 1; split < y.size(); ++split) {
    Seq y1 = y.closed(1, split);
    Seq y2 = y.closed(split + 1, y.size());
    for (Symbol c : occ.alphabet()) {
      if (square_of(s, y1 + Seq::repeated(c, 1) + y2)) return true;
    }
  }
  return false;
}

}  // namespace maxrep::oracle
