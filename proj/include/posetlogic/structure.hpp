#pragma once

#include <array>
#include <optional>
#include <string>

#include "posetlogic/poset.hpp"

namespace posetlogic {

/// A quadruple (a, b, c, d) with a < c, b covered by c and b < d.
///
///  - kN:         additionally a, b and c, d and a, d pairwise incomparable.
///  - kWeakN:     a, b and c, d incomparable; a, d unconstrained.
///  - kCoveringN: an N in which a is covered by c and b by d as well.
struct NWitness {
  enum class Kind { kN, kCoveringN, kWeakN };

  Kind kind = Kind::kN;
  std::array<int, 4> quad{};

  int a() const { return quad[0]; }
  int b() const { return quad[1]; }
  int c() const { return quad[2]; }
  int d() const { return quad[3]; }

  friend bool operator==(const NWitness&, const NWitness&) = default;
};

std::string to_string(NWitness::Kind kind);

/// True iff `quad` satisfies the conditions of `kind` in `p`.
bool forms(const Poset& p, NWitness::Kind kind, const std::array<int, 4>& quad);

/// Lexicographically smallest (a, b, c, d) forming an N, if any.
std::optional<NWitness> find_n(const Poset& p);
bool is_n_free(const Poset& p);
/// Lexicographically smallest N whose comparable pairs are all covers.
std::optional<NWitness> find_covering_n(const Poset& p);
/// Lexicographically smallest weak N.
std::optional<NWitness> find_weak_n(const Poset& p);

/// Whether every maximal chain meets every maximal antichain.
bool chain_antichain_property(const Poset& p, const Limits& limits = {});

}  // namespace posetlogic
