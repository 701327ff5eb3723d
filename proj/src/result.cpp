#include "maxrep/result.hpp"

namespace maxrep {

KRepResult make_k_rep_result(const Seq& input, Seq unit, std::size_t k,
                             std::optional<Symbol> sigma, Seq prefix,
                             Seq suffix) {
  KRepResult r;
  r.unit = std::move(unit);
  r.prefix = std::move(prefix);
  r.suffix = std::move(suffix);
  r.sigma = sigma;
  r.k = k;
  auto blocks = k_fold_leftmost_embedding(input, r.unit, k);
  if (blocks) {
    r.witness = std::move(*blocks);
    r.verified = true;
  } else {
    r.witness.clear();
    r.verified = false;
  }
  return r;
}

}  // namespace maxrep
