#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetlogic/orthoset.hpp"
#include "posetlogic/poset.hpp"

namespace posetlogic {

/// Hard ceiling for labeled enumeration regardless of overrides.
inline constexpr int kMaxEnumerationN = 7;

/// Calls `visit` once for every labeled poset on {0..n-1}.
///
/// Posets are grown one element at a time: element k is attached below an
/// up-set U and above a down-set D of the poset on {0..k-1}, where every
/// member of D lies below every member of U. Each labeled poset arises
/// exactly once, from its restriction to the first k elements. D and U are
/// visited in ascending mask order, which fixes the enumeration order.
///
/// Throws SizeLimitError if n exceeds `limits.max_census_n` or 7.
void for_each_labeled_poset(int n, const std::function<void(const Poset&)>& visit,
                            const Limits& limits = {});

/// Materialized form of for_each_labeled_poset; intended for small n.
std::vector<Poset> enumerate_labeled_posets(int n, const Limits& limits = {});

/// Seeded random poset. With a std::mt19937_64 seeded by `seed`:
///  1. shuffle 0..n-1 by Fisher-Yates, i from n-1 down to 1, j = next() % (i+1);
///  2. for every pair i < j of positions, in row-major order, draw
///     u = (next() >> 11) * 2^-53 and add perm[i] < perm[j] when u < edge_prob;
///  3. take the transitive closure.
/// Throws std::invalid_argument unless 0 <= edge_prob <= 1.
Poset random_poset(int n, std::uint64_t seed, double edge_prob);

/// Seeded random orthoset: every pair x < y, in row-major order, is made
/// orthogonal when (next() >> 11) * 2^-53 < edge_prob.
Orthoset random_orthoset(int n, std::uint64_t seed, double edge_prob);

/// Per-predicate verdicts for one poset, its incomparability orthoset and
/// that orthoset's logic.
struct TheoremCheck {
  bool n_free = false;
  bool covering_n_free = false;
  bool weak_n_free = false;
  bool chain_antichain = false;
  bool dacey = false;
  bool compatible = false;
  bool orthomodular = false;
  bool boolean = false;
  /// Descriptions of every failed equivalence or internal consistency check.
  std::vector<std::string> violations;
};

/// Evaluates every predicate and checks
///   N-free <=> Dacey <=> orthomodular,
///   weak-N-free <=> compatible <=> Boolean,
///   N-free <=> chain-antichain property,
///   N-free <=> covering-N-free,
/// plus the ortholattice laws of the logic and the up/down partition of the
/// complement of every X u X^perp.
TheoremCheck verify_theorems(const Poset& p, const Limits& limits = {});

/// Empty if for every orthoclosed X of the incomparability orthoset the
/// up/down sets partition P \ (X u X^perp); otherwise the first failure.
std::optional<std::string> check_ud_partition(const Poset& p, const Limits& limits = {});

struct CensusViolation {
  int n = 0;
  /// (shard, index within shard) orders violations like the single-pass
  /// enumeration does.
  std::size_t shard = 0;
  std::uint64_t index = 0;
  std::vector<std::pair<int, int>> covers;
  std::string message;

  friend bool operator==(const CensusViolation&, const CensusViolation&) = default;
};

struct CensusSummary {
  int n = 0;
  std::uint64_t total_posets = 0;
  std::uint64_t n_free = 0;
  std::uint64_t covering_n_free = 0;
  std::uint64_t weak_n_free = 0;
  std::uint64_t chain_antichain = 0;
  std::uint64_t dacey = 0;
  std::uint64_t compatible = 0;
  std::uint64_t orthomodular = 0;
  std::uint64_t boolean = 0;
  /// Sorted by enumeration index; must be empty.
  std::vector<CensusViolation> violations;

  /// Adds the counts of `other` and merges its violations in index order.
  /// Associative and commutative.
  void merge(const CensusSummary& other);

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

/// Number of independent work units for size n. Shard s holds every poset
/// whose restriction to the first max(0, n-2) elements is the s-th poset of
/// that size in enumeration order.
std::size_t census_shard_count(int n, const Limits& limits = {});
/// Summary of one shard. Merging the shards of n in any order reproduces the
/// single-pass summary.
CensusSummary run_census_shard(int n, std::size_t shard, const Limits& limits = {});

/// One summary per n in 0..max_n. `workers` threads pull shards; the result
/// is independent of the worker count.
std::vector<CensusSummary> census_run(int max_n, int workers, const Limits& limits = {});

enum class SearchPredicate {
  /// N-free poset whose strict comparability orthoset is not Dacey.
  kNFreeButStrictNotDacey,
  /// Poset whose strict comparability orthoset is Dacey.
  kStrictDacey,
};

/// Parses "nfree_but_strict_not_dacey" / "strict_dacey"; throws
/// std::invalid_argument otherwise.
SearchPredicate parse_search_predicate(const std::string& name);
std::string to_string(SearchPredicate predicate);
bool satisfies(const Poset& p, SearchPredicate predicate, const Limits& limits = {});

/// Smallest poset (by size, then enumeration order) satisfying `predicate`
/// with at most `max_n` elements.
std::optional<Poset> search_counterexample(SearchPredicate predicate, int max_n,
                                           const Limits& limits = {});

/// Every match up to `max_n`, in search order, stopping after `limit` hits.
std::vector<Poset> search_all(SearchPredicate predicate, int max_n, std::size_t limit,
                              const Limits& limits = {});

}  // namespace posetlogic
