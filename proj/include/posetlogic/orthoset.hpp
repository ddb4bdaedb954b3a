#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlogic/errors.hpp"
#include "posetlogic/subset.hpp"

namespace posetlogic {

/// A finite set 0..n-1 with an irreflexive symmetric orthogonality relation,
/// i.e. a simple graph. `neighbours(x)` is the row {y : x is orthogonal to y}.
class Orthoset {
 public:
  Orthoset() = default;

  /// Throws IndexError on out-of-range endpoints and std::invalid_argument on
  /// a loop (x, x).
  static Orthoset from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Rows must be symmetric with an empty diagonal; checked.
  static Orthoset from_rows(std::vector<SubsetMask> rows);

  int size() const { return static_cast<int>(adj_.size()); }
  SubsetMask universe() const { return SubsetMask::full(size()); }
  SubsetMask neighbours(int x) const { return adj_[x]; }
  const std::vector<SubsetMask>& rows() const { return adj_; }
  bool orthogonal(int x, int y) const { return adj_[x].contains(y); }

  /// Same elements, complementary relation on distinct pairs.
  Orthoset complement() const;

  friend bool operator==(const Orthoset&, const Orthoset&) = default;

 private:
  std::vector<SubsetMask> adj_;
};

/// Orthogonal complement: every element orthogonal to all of `s`.
/// The complement of the empty set is the whole orthoset.
SubsetMask perp(const Orthoset& o, SubsetMask s);
SubsetMask double_perp(const Orthoset& o, SubsetMask s);
bool is_orthoclosed(const Orthoset& o, SubsetMask s);

/// Every orthoclosed set, ascending by mask value.
///
/// The closed sets form the Moore family generated by the element
/// complements {x^perp}: every closed set other than the universe is an
/// intersection of some of them. The family is grown by intersecting
/// already-found sets with generators, so the cost is proportional to the
/// output rather than to 2^n.
///
/// Throws SizeLimitError when n exceeds `limits.max_closed_elements` or the
/// family outgrows `limits.max_family`.
std::vector<SubsetMask> enumerate_orthoclosed(const Orthoset& o, const Limits& limits = {});

/// All maximal pairwise-orthogonal subsets of `x` (maximal cliques of the
/// induced graph), ascending. The empty set has the single basis {}.
std::vector<SubsetMask> bases(const Orthoset& o, SubsetMask x);

/// The three equivalent ways of saying that an orthoclosed X is Dacey,
/// quantified over every basis B of X.
enum class DaceyCriterion {
  kClosureOfBasis,   ///< X = B^perp^perp
  kEqualComplement,  ///< B^perp = X^perp
  kPerpInclusion,    ///< B^perp is contained in X^perp
};

/// Whether every basis of the orthoclosed set `x` passes `criterion`.
/// `x` is not checked for closedness.
bool is_dacey_subset(const Orthoset& o, SubsetMask x,
                     DaceyCriterion criterion = DaceyCriterion::kPerpInclusion);

struct DaceyResult {
  bool dacey = true;
  /// First failing orthoclosed set and basis, both minimal in mask order.
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;
};

DaceyResult is_dacey(const Orthoset& o, const Limits& limits = {});

struct CompatibleResult {
  bool compatible = true;
  /// Lexicographically smallest non-orthogonal pair (x, y), x < y, with no z
  /// such that x^perp u y^perp is contained in z^perp.
  std::optional<std::pair<int, int>> witness;
};

/// Decides compatibility by the witness search over z and by the
/// closure-intersection reformulation; throws std::logic_error if the two
/// disagree. Throws SizeLimitError above `limits.max_closed_elements`.
CompatibleResult is_compatible(const Orthoset& o, const Limits& limits = {});

/// The witness-search form alone. Exposed for cross-checking.
CompatibleResult is_compatible_by_witness(const Orthoset& o);
/// The form "x^perp^perp and y^perp^perp disjoint implies x orthogonal to y".
CompatibleResult is_compatible_by_closures(const Orthoset& o);

/// Decides "x is orthoclosed and y = x^perp" from orthogonality alone: x and y
/// are orthogonal and every z outside both is non-orthogonal to some member
/// of x and some member of y.
bool orthocomplement_pair_check(const Orthoset& o, SubsetMask x, SubsetMask y);

}  // namespace posetlogic
