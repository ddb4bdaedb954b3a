#include "posetlogic/logic.hpp"

#include <algorithm>
#include <stdexcept>

namespace posetlogic {

Logic::Index Logic::index_of(SubsetMask s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end() || *it != s) {
    throw NotOrthoclosedError(to_string(s) + " is not an element of the logic");
  }
  return static_cast<Index>(it - elements_.begin());
}

Logic Logic::build(const Orthoset& o, const Limits& limits) {
  Limits capped = limits;
  capped.max_family = std::min(limits.max_family, limits.max_lattice);
  Logic l;
  l.elements_ = enumerate_orthoclosed(o, capped);
  const std::size_t m = l.elements_.size();
  l.meet_.resize(m * m);
  l.join_.resize(m * m);
  l.ocompl_.resize(m);
  std::vector<SubsetMask> complements(m);
  for (std::size_t i = 0; i < m; ++i) {
    complements[i] = perp(o, l.elements_[i]);
    l.ocompl_[i] = l.index_of(complements[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const SubsetMask a = l.elements_[i];
      const SubsetMask b = l.elements_[j];
      const SubsetMask meet = a & b;
      if (!is_orthoclosed(o, meet)) throw std::logic_error("meet of closed sets is not closed");
      const SubsetMask join = double_perp(o, a | b);
      if (join != perp(o, complements[i] & complements[j])) {
        throw std::logic_error("join formulas disagree on " + to_string(a) + ", " + to_string(b));
      }
      l.meet_[i * m + j] = l.meet_[j * m + i] = l.index_of(meet);
      l.join_[i * m + j] = l.join_[j * m + i] = l.index_of(join);
    }
  }
  return l;
}

std::vector<std::pair<Logic::Index, Logic::Index>> Logic::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  const auto m = static_cast<Index>(size());
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool between = false;
      for (Index k = 0; k < m && !between; ++k) {
        between = k != i && k != j && leq(i, k) && leq(k, j);
      }
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

LawCheck verify_ortholattice(const Logic& l) {
  using I = Logic::Index;
  const auto m = static_cast<I>(l.size());
  const I zero = l.bottom();
  const I one = l.top();
  auto fail = [](std::string law, std::vector<I> ce) { return LawCheck{false, std::move(law), std::move(ce)}; };

  if (m == 0) return fail("nonempty", {});
  for (I i = 0; i < m; ++i) {
    if (!l.leq(zero, i) || !l.leq(i, one)) return fail("bounds", {i});
  }
  if (l.ocompl(zero) != one) return fail("0' = 1", {zero});
  if (l.ocompl(one) != zero) return fail("1' = 0", {one});
  for (I x = 0; x < m; ++x) {
    const I xc = l.ocompl(x);
    if (l.ocompl(xc) != x) return fail("x'' = x", {x});
    if (l.meet(x, xc) != zero) return fail("x ^ x' = 0", {x});
    if (l.join(x, xc) != one) return fail("x v x' = 1", {x});
  }
  for (I x = 0; x < m; ++x) {
    for (I y = 0; y < m; ++y) {
      const I xc = l.ocompl(x);
      const I yc = l.ocompl(y);
      if (l.ocompl(l.join(x, y)) != l.meet(xc, yc)) return fail("(x v y)' = x' ^ y'", {x, y});
      if (l.ocompl(l.meet(x, y)) != l.join(xc, yc)) return fail("(x ^ y)' = x' v y'", {x, y});
      if (l.leq(x, y) && !l.leq(yc, xc)) return fail("antitone", {x, y});
    }
  }
  return {};
}

OrthomodularResult is_orthomodular(const Logic& l) {
  const auto m = static_cast<Logic::Index>(l.size());
  for (Logic::Index x = 0; x < m; ++x) {
    const Logic::Index xc = l.ocompl(x);
    for (Logic::Index y = 0; y < m; ++y) {
      if (!l.leq(x, y)) continue;
      if (l.join(x, l.meet(y, xc)) != y) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

bool disjoint_implies_orthogonal(const Logic& l) {
  const auto m = static_cast<Logic::Index>(l.size());
  for (Logic::Index a = 0; a < m; ++a) {
    for (Logic::Index b = 0; b < m; ++b) {
      if (l.meet(a, b) == l.bottom() && !l.leq(a, l.ocompl(b))) return false;
    }
  }
  return true;
}

BooleanResult is_boolean(const Logic& l) {
  const auto m = static_cast<Logic::Index>(l.size());
  BooleanResult result;
  for (Logic::Index x = 0; x < m && result.boolean; ++x) {
    for (Logic::Index y = 0; y < m && result.boolean; ++y) {
      for (Logic::Index z = 0; z < m; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          result = {false, std::array{x, y, z}};
          break;
        }
      }
    }
  }
  if (result.boolean != disjoint_implies_orthogonal(l)) {
    throw std::logic_error("distributivity and the disjointness criterion disagree");
  }
  return result;
}

}  // namespace posetlogic
