#include "posetlogic/structure.hpp"

namespace posetlogic {

std::string to_string(NWitness::Kind kind) {
  switch (kind) {
    case NWitness::Kind::kN: return "N";
    case NWitness::Kind::kCoveringN: return "coveringN";
    case NWitness::Kind::kWeakN: return "weakN";
  }
  return "?";
}

bool forms(const Poset& p, NWitness::Kind kind, const std::array<int, 4>& quad) {
  for (int e : quad) {
    if (e < 0 || e >= p.size()) return false;
  }
  auto [a, b, c, d] = quad;
  bool weak = p.lt(a, c) && p.covers(b, c) && p.lt(b, d) && p.incomparable(a, b) &&
              p.incomparable(c, d);
  switch (kind) {
    case NWitness::Kind::kWeakN: return weak;
    case NWitness::Kind::kN: return weak && p.incomparable(a, d);
    case NWitness::Kind::kCoveringN:
      return weak && p.incomparable(a, d) && p.covers(a, c) && p.covers(b, d);
  }
  return false;
}

namespace {

// Scans a, b, c, d in lexicographic order, so the first hit is minimal.
std::optional<NWitness> scan(const Poset& p, NWitness::Kind kind) {
  const bool need_ad = kind != NWitness::Kind::kWeakN;
  const bool covering = kind == NWitness::Kind::kCoveringN;
  for (int a = 0; a < p.size(); ++a) {
    const SubsetMask c_from_a = covering ? p.upper_covers(a) : p.above(a);
    for (int b : p.incomparable_to(a)) {
      for (int c : c_from_a & p.upper_covers(b)) {
        SubsetMask ds = (covering ? p.upper_covers(b) : p.above(b)) & p.incomparable_to(c);
        if (need_ad) ds &= p.incomparable_to(a);
        if (!ds.empty()) return NWitness{kind, {a, b, c, ds.first()}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<NWitness> find_n(const Poset& p) { return scan(p, NWitness::Kind::kN); }

bool is_n_free(const Poset& p) { return !find_n(p).has_value(); }

std::optional<NWitness> find_covering_n(const Poset& p) {
  return scan(p, NWitness::Kind::kCoveringN);
}

std::optional<NWitness> find_weak_n(const Poset& p) { return scan(p, NWitness::Kind::kWeakN); }

bool chain_antichain_property(const Poset& p, const Limits& limits) {
  // The empty poset has {} as its only maximal chain and antichain; treat it
  // as satisfying the property, matching N-freeness.
  if (p.size() == 0) return true;
  const auto chains = maximal_chains(p, limits);
  const auto antichains = maximal_antichains(p, limits);
  for (SubsetMask ch : chains) {
    for (SubsetMask an : antichains) {
      if (!ch.intersects(an)) return false;
    }
  }
  return true;
}

}  // namespace posetlogic
