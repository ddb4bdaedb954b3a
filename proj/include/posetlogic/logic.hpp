#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetlogic/orthoset.hpp"

namespace posetlogic {

/// The ortholattice of orthoclosed subsets of an orthoset, materialized as
/// index tables. Element 0 is the empty set and the last element is the
/// whole orthoset; elements are sorted by mask value.
class Logic {
 public:
  using Index = std::uint32_t;

  /// Throws SizeLimitError when the closed family exceeds
  /// `limits.max_lattice` (or enumeration caps). Throws std::logic_error if
  /// a meet is not closed or the two join formulas disagree.
  static Logic build(const Orthoset& o, const Limits& limits = {});

  std::size_t size() const { return elements_.size(); }
  const std::vector<SubsetMask>& elements() const { return elements_; }
  SubsetMask element(Index i) const { return elements_[i]; }
  /// Index of a closed set; throws NotOrthoclosedError if `s` is not one.
  Index index_of(SubsetMask s) const;

  Index bottom() const { return 0; }
  Index top() const { return static_cast<Index>(size() - 1); }

  bool leq(Index i, Index j) const { return element(i).subset_of(element(j)); }
  Index meet(Index i, Index j) const { return meet_[i * size() + j]; }
  Index join(Index i, Index j) const { return join_[i * size() + j]; }
  Index ocompl(Index i) const { return ocompl_[i]; }

  /// Pairs (i, j) with i covered by j in the inclusion order.
  std::vector<std::pair<Index, Index>> cover_pairs() const;

 private:
  std::vector<SubsetMask> elements_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  std::vector<Index> ocompl_;
};

inline Logic build_logic(const Orthoset& o, const Limits& limits = {}) {
  return Logic::build(o, limits);
}

/// Outcome of a lattice law check: the name of the first failing law and the
/// element indices that break it.
struct LawCheck {
  bool ok = true;
  std::string failed_law;
  std::vector<Logic::Index> counterexample;
};

/// Bounds, orthocomplement laws (0' = 1, 1' = 0, x'' = x, both De Morgan
/// laws, x ^ x' = 0, x v x' = 1) and antitonicity of the complement.
LawCheck verify_ortholattice(const Logic& l);

struct OrthomodularResult {
  bool orthomodular = true;
  /// Smallest (x, y) by index with x <= y and y != x v (y ^ x').
  std::optional<std::pair<Logic::Index, Logic::Index>> witness;
};

OrthomodularResult is_orthomodular(const Logic& l);

struct BooleanResult {
  bool boolean = true;
  /// Smallest (x, y, z) by index with x ^ (y v z) != (x ^ y) v (x ^ z).
  std::optional<std::array<Logic::Index, 3>> witness;
};

/// Distributivity by brute force over triples. Cross-checked against the
/// criterion "x ^ y = 0 implies x <= y'"; throws std::logic_error if the two
/// disagree.
BooleanResult is_boolean(const Logic& l);

/// The criterion "x ^ y = 0 implies x <= y'" alone.
bool disjoint_implies_orthogonal(const Logic& l);

}  // namespace posetlogic
