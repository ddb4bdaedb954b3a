#include "posetlogic/bridges.hpp"

namespace posetlogic {

Orthoset incomparability_orthoset(const Poset& p) {
  std::vector<SubsetMask> rows(p.size());
  for (int x = 0; x < p.size(); ++x) rows[x] = p.incomparable_to(x);
  return Orthoset::from_rows(std::move(rows));
}

Orthoset strict_comparability_orthoset(const Poset& p) {
  std::vector<SubsetMask> rows(p.size());
  for (int x = 0; x < p.size(); ++x) rows[x] = p.comparable(x);
  return Orthoset::from_rows(std::move(rows));
}

UpDown ud_decomposition(const Poset& p, SubsetMask x) {
  const Orthoset o = incomparability_orthoset(p);
  if (!x.subset_of(o.universe()) || !is_orthoclosed(o, x)) {
    throw NotOrthoclosedError(to_string(x, &p.labels()) +
                              " is not orthoclosed in the incomparability orthoset");
  }
  const SubsetMask x_perp = perp(o, x);
  SubsetMask above_x, above_perp, below_x, below_perp;
  for (int e : x) {
    above_x |= p.above(e);
    below_x |= p.below(e);
  }
  for (int e : x_perp) {
    above_perp |= p.above(e);
    below_perp |= p.below(e);
  }
  const SubsetMask rest = o.universe() - x - x_perp;
  return {rest & above_x & above_perp, rest & below_x & below_perp};
}

}  // namespace posetlogic
