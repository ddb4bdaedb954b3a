#pragma once

#include "posetlogic/orthoset.hpp"
#include "posetlogic/poset.hpp"

namespace posetlogic {

/// Orthogonality = incomparability.
Orthoset incomparability_orthoset(const Poset& p);
/// Orthogonality = x < y or y < x.
Orthoset strict_comparability_orthoset(const Poset& p);

/// Split of the elements outside X and X^perp in the incomparability
/// orthoset: `up` holds those above some member of X and some member of
/// X^perp, `down` those below both.
struct UpDown {
  SubsetMask up;
  SubsetMask down;
};

/// Throws NotOrthoclosedError unless `x` is orthoclosed in
/// incomparability_orthoset(p).
UpDown ud_decomposition(const Poset& p, SubsetMask x);

}  // namespace posetlogic
