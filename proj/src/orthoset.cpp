#include "posetlogic/orthoset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "posetlogic/detail/cliques.hpp"

namespace posetlogic {

Orthoset Orthoset::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxElements) {
    throw SizeLimitError("orthoset size " + std::to_string(n) + " out of range");
  }
  std::vector<SubsetMask> rows(n);
  for (auto [x, y] : edges) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw IndexError("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") out of range for n = " + std::to_string(n));
    }
    if (x == y) throw std::invalid_argument("orthogonality must be irreflexive");
    rows[x] = rows[x].with(y);
    rows[y] = rows[y].with(x);
  }
  Orthoset o;
  o.adj_ = std::move(rows);
  return o;
}

Orthoset Orthoset::from_rows(std::vector<SubsetMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxElements) throw SizeLimitError("orthoset size " + std::to_string(n) + " out of range");
  for (int x = 0; x < n; ++x) {
    if (!rows[x].subset_of(SubsetMask::full(n)) || rows[x].contains(x)) {
      throw std::invalid_argument("row " + std::to_string(x) + " is not irreflexive or in range");
    }
    for (int y : rows[x]) {
      if (!rows[y].contains(x)) throw std::invalid_argument("orthogonality must be symmetric");
    }
  }
  Orthoset o;
  o.adj_ = std::move(rows);
  return o;
}

Orthoset Orthoset::complement() const {
  std::vector<SubsetMask> rows(size());
  for (int x = 0; x < size(); ++x) rows[x] = universe() - adj_[x] - SubsetMask::singleton(x);
  Orthoset o;
  o.adj_ = std::move(rows);
  return o;
}

SubsetMask perp(const Orthoset& o, SubsetMask s) {
  SubsetMask out = o.universe();
  for (int x : s) out &= o.neighbours(x);
  return out;
}

SubsetMask double_perp(const Orthoset& o, SubsetMask s) { return perp(o, perp(o, s)); }

bool is_orthoclosed(const Orthoset& o, SubsetMask s) { return double_perp(o, s) == s; }

std::vector<SubsetMask> enumerate_orthoclosed(const Orthoset& o, const Limits& limits) {
  if (o.size() > limits.max_closed_elements) {
    throw SizeLimitError("closed-set enumeration refused for " + std::to_string(o.size()) +
                         " elements (cap " + std::to_string(limits.max_closed_elements) + ")");
  }
  std::vector<SubsetMask> generators;
  for (int x = 0; x < o.size(); ++x) generators.push_back(o.neighbours(x));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::unordered_set<std::uint64_t> seen{o.universe().bits()};
  std::vector<SubsetMask> family{o.universe()};
  for (std::size_t head = 0; head < family.size(); ++head) {
    const SubsetMask s = family[head];
    for (SubsetMask g : generators) {
      const SubsetMask t = s & g;
      if (seen.insert(t.bits()).second) {
        if (family.size() >= limits.max_family) {
          throw SizeLimitError("orthoclosed family exceeds " + std::to_string(limits.max_family) +
                               " sets");
        }
        family.push_back(t);
      }
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<SubsetMask> bases(const Orthoset& o, SubsetMask x) {
  return detail::maximal_cliques(o.rows(), x);
}

bool is_dacey_subset(const Orthoset& o, SubsetMask x, DaceyCriterion criterion) {
  const SubsetMask x_perp = perp(o, x);
  for (SubsetMask b : bases(o, x)) {
    const SubsetMask b_perp = perp(o, b);
    bool ok = false;
    switch (criterion) {
      case DaceyCriterion::kClosureOfBasis: ok = perp(o, b_perp) == x; break;
      case DaceyCriterion::kEqualComplement: ok = b_perp == x_perp; break;
      case DaceyCriterion::kPerpInclusion: ok = b_perp.subset_of(x_perp); break;
    }
    if (!ok) return false;
  }
  return true;
}

DaceyResult is_dacey(const Orthoset& o, const Limits& limits) {
  for (SubsetMask x : enumerate_orthoclosed(o, limits)) {
    const SubsetMask x_perp = perp(o, x);
    for (SubsetMask b : bases(o, x)) {
      if (!perp(o, b).subset_of(x_perp)) return {false, std::make_pair(x, b)};
    }
  }
  return {};
}

CompatibleResult is_compatible_by_witness(const Orthoset& o) {
  for (int x = 0; x < o.size(); ++x) {
    for (int y = x + 1; y < o.size(); ++y) {
      if (o.orthogonal(x, y)) continue;
      const SubsetMask needed = o.neighbours(x) | o.neighbours(y);
      bool found = false;
      for (int z = 0; z < o.size() && !found; ++z) found = needed.subset_of(o.neighbours(z));
      if (!found) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

CompatibleResult is_compatible_by_closures(const Orthoset& o) {
  std::vector<SubsetMask> closure(o.size());
  for (int x = 0; x < o.size(); ++x) closure[x] = perp(o, o.neighbours(x));
  for (int x = 0; x < o.size(); ++x) {
    for (int y = x + 1; y < o.size(); ++y) {
      if (!closure[x].intersects(closure[y]) && !o.orthogonal(x, y)) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {};
}

CompatibleResult is_compatible(const Orthoset& o, const Limits& limits) {
  if (o.size() > limits.max_closed_elements) {
    throw SizeLimitError("compatibility check refused for " + std::to_string(o.size()) +
                         " elements (cap " + std::to_string(limits.max_closed_elements) + ")");
  }
  CompatibleResult direct = is_compatible_by_witness(o);
  const CompatibleResult via_closures = is_compatible_by_closures(o);
  if (direct.compatible != via_closures.compatible || direct.witness != via_closures.witness) {
    throw std::logic_error("compatibility formulations disagree");
  }
  return direct;
}

bool orthocomplement_pair_check(const Orthoset& o, SubsetMask x, SubsetMask y) {
  for (int e : x) {
    if (!y.subset_of(o.neighbours(e))) return false;
  }
  for (int z : o.universe() - x - y) {
    const SubsetMask blocked = o.neighbours(z);
    if ((x - blocked).empty() || (y - blocked).empty()) return false;
  }
  return true;
}

}  // namespace posetlogic
