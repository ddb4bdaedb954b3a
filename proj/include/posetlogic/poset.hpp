#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetlogic/errors.hpp"
#include "posetlogic/subset.hpp"

namespace posetlogic {

/// A finite strict partial order on the indices 0..n-1.
///
/// Both the order and its cover (Hasse) relation are stored as dense bit
/// rows: `above(x)` is the row {y : x < y} and `covers_of(x)` is
/// {y : x is covered by y}. Instances are immutable once built and every
/// query is a pure function, so a Poset may be shared freely between threads.
class Poset {
 public:
  /// The empty poset.
  Poset() = default;

  /// Builds the order generated by `relations` (pairs (x, y) meaning x < y).
  /// The pairs need not be covers; the order is transitively closed and the
  /// cover relation recomputed as its transitive reduction.
  ///
  /// Throws IndexError on an out-of-range index, CycleError if the relation
  /// is not acyclic, SizeLimitError if n exceeds `limits.max_poset_elements`.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& relations,
                           const Limits& limits = {});

  /// Builds a poset from a transitively closed, irreflexive "strictly above"
  /// relation without re-closing it. Intended for enumerators that construct
  /// valid orders directly; `validate()` reports whether the input was sound.
  static Poset from_closed_rows(std::vector<SubsetMask> above);

  int size() const { return n_; }

  bool lt(int x, int y) const;
  bool leq(int x, int y) const;
  bool incomparable(int x, int y) const;
  /// x is covered by y.
  bool covers(int x, int y) const;

  /// {y : x < y}. No bounds checking.
  SubsetMask above(int x) const { return above_[x]; }
  /// {y : y < x}.
  SubsetMask below(int x) const { return below_[x]; }
  /// {y : x is covered by y}.
  SubsetMask upper_covers(int x) const { return cover_up_[x]; }
  /// Elements comparable to x, excluding x itself.
  SubsetMask comparable(int x) const { return above_[x] | below_[x]; }
  /// Elements incomparable to x (x excluded).
  SubsetMask incomparable_to(int x) const {
    return SubsetMask::full(n_) - comparable(x) - SubsetMask::singleton(x);
  }

  /// All pairs (x, y) with x covered by y, in lexicographic order.
  std::vector<std::pair<int, int>> cover_pairs() const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name of x: its label when present, otherwise its index.
  std::string label(int x) const;
  /// Replaces the display names. The size must match or be zero.
  Poset with_labels(std::vector<std::string> labels) const;

  /// Empty string if all structural invariants hold, otherwise a description
  /// of the first violated one.
  std::string validate() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.above_ == b.above_;
  }

 private:
  void check_index(int x) const;
  void derive_from_above();

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<SubsetMask> above_;
  std::vector<SubsetMask> below_;
  std::vector<SubsetMask> cover_up_;
};

/// The order with every relation reversed. Labels are kept.
Poset dual(const Poset& p);

/// A chain 0 < 1 < ... < n-1.
Poset chain(int n);
/// n pairwise incomparable elements.
Poset antichain(int n);
/// The four-element N: a < c, b < c, b < d on (a, b, c, d) = (0, 1, 2, 3).
Poset n_poset();
/// Two minimal elements below two maximal ones: a, b < c, d.
Poset diamond22();

/// All maximal chains, ascending by mask value. Throws SizeLimitError above
/// `limits.max_poset_elements`.
std::vector<SubsetMask> maximal_chains(const Poset& p, const Limits& limits = {});
/// All maximal antichains, ascending by mask value.
std::vector<SubsetMask> maximal_antichains(const Poset& p, const Limits& limits = {});

}  // namespace posetlogic
