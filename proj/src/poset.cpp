#include "posetlogic/poset.hpp"

#include "posetlogic/detail/cliques.hpp"

namespace posetlogic {

namespace {

void check_cap(int n, const Limits& limits) {
  if (n < 0 || n > kMaxElements || n > limits.max_poset_elements) {
    throw SizeLimitError("poset with " + std::to_string(n) + " elements exceeds the cap of " +
                         std::to_string(std::min(limits.max_poset_elements, kMaxElements)));
  }
}

}  // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& relations,
                         const Limits& limits) {
  check_cap(n, limits);
  std::vector<SubsetMask> above(n);
  for (auto [x, y] : relations) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw IndexError("relation (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") out of range for n = " + std::to_string(n));
    }
    above[x] = above[x].with(y);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (above[i].contains(k)) above[i] |= above[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (above[i].contains(i)) {
      throw CycleError("relation is not acyclic: element " + std::to_string(i) +
                       " lies on a cycle");
    }
  }
  return from_closed_rows(std::move(above));
}

Poset Poset::from_closed_rows(std::vector<SubsetMask> above) {
  Poset p;
  p.n_ = static_cast<int>(above.size());
  p.above_ = std::move(above);
  p.derive_from_above();
  return p;
}

void Poset::derive_from_above() {
  below_.assign(n_, SubsetMask{});
  cover_up_.assign(n_, SubsetMask{});
  for (int x = 0; x < n_; ++x) {
    for (int y : above_[x]) below_[y] = below_[y].with(x);
  }
  for (int x = 0; x < n_; ++x) {
    SubsetMask indirect;
    for (int z : above_[x]) indirect |= above_[z];
    cover_up_[x] = above_[x] - indirect;
  }
}

void Poset::check_index(int x) const {
  if (x < 0 || x >= n_) {
    throw IndexError("element " + std::to_string(x) + " out of range for n = " +
                     std::to_string(n_));
  }
}

bool Poset::lt(int x, int y) const {
  check_index(x);
  check_index(y);
  return above_[x].contains(y);
}

bool Poset::leq(int x, int y) const { return x == y ? (check_index(x), true) : lt(x, y); }

bool Poset::incomparable(int x, int y) const {
  check_index(x);
  check_index(y);
  return x != y && !above_[x].contains(y) && !above_[y].contains(x);
}

bool Poset::covers(int x, int y) const {
  check_index(x);
  check_index(y);
  return cover_up_[x].contains(y);
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    for (int y : cover_up_[x]) out.emplace_back(x, y);
  }
  return out;
}

std::string Poset::label(int x) const {
  check_index(x);
  return x < static_cast<int>(labels_.size()) ? labels_[x] : std::to_string(x);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw IndexError("expected " + std::to_string(n_) + " labels, got " +
                     std::to_string(labels.size()));
  }
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

std::string Poset::validate() const {
  const SubsetMask all = SubsetMask::full(n_);
  if (static_cast<int>(above_.size()) != n_ || static_cast<int>(below_.size()) != n_ ||
      static_cast<int>(cover_up_.size()) != n_) {
    return "row count does not match n";
  }
  for (int x = 0; x < n_; ++x) {
    if (!above_[x].subset_of(all)) return "row " + std::to_string(x) + " has bits beyond n";
    if (above_[x].contains(x)) return "not irreflexive at " + std::to_string(x);
    for (int y : above_[x]) {
      if (above_[y].contains(x)) {
        return "not antisymmetric at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
      }
      if (!above_[y].subset_of(above_[x])) {
        return "not transitive through " + std::to_string(y);
      }
    }
  }
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      bool between = false;
      for (int z : above_[x]) between = between || above_[z].contains(y);
      if (cover_up_[x].contains(y) != (above_[x].contains(y) && !between)) {
        return "cover relation inconsistent at (" + std::to_string(x) + ", " +
               std::to_string(y) + ")";
      }
      if (below_[y].contains(x) != above_[x].contains(y)) return "below rows inconsistent";
    }
  }
  // The closure of the cover relation must reproduce the order.
  std::vector<SubsetMask> closure = cover_up_;
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < n_; ++i) {
      if (closure[i].contains(k)) closure[i] |= closure[k];
    }
  }
  if (closure != above_) return "order is not the transitive closure of the cover relation";
  return {};
}

Poset dual(const Poset& p) {
  std::vector<SubsetMask> rows(p.size());
  for (int x = 0; x < p.size(); ++x) rows[x] = p.below(x);
  return Poset::from_closed_rows(std::move(rows)).with_labels(p.labels());
}

Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_covers(n, rel, Limits{.max_poset_elements = kMaxElements});
}

Poset antichain(int n) { return Poset::from_covers(n, {}, Limits{.max_poset_elements = kMaxElements}); }

Poset n_poset() {
  return Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}}).with_labels({"a", "b", "c", "d"});
}

Poset diamond22() {
  return Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}).with_labels({"a", "b", "c", "d"});
}

std::vector<SubsetMask> maximal_chains(const Poset& p, const Limits& limits) {
  check_cap(p.size(), limits);
  std::vector<SubsetMask> adj(p.size());
  for (int x = 0; x < p.size(); ++x) adj[x] = p.comparable(x);
  return detail::maximal_cliques(adj, SubsetMask::full(p.size()));
}

std::vector<SubsetMask> maximal_antichains(const Poset& p, const Limits& limits) {
  check_cap(p.size(), limits);
  std::vector<SubsetMask> adj(p.size());
  for (int x = 0; x < p.size(); ++x) adj[x] = p.incomparable_to(x);
  return detail::maximal_cliques(adj, SubsetMask::full(p.size()));
}

}  // namespace posetlogic
