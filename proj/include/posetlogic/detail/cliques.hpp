#pragma once

#include <span>
#include <vector>

#include "posetlogic/subset.hpp"

namespace posetlogic::detail {

/// Maximal cliques of the graph with adjacency rows `adj`, restricted to the
/// vertex set `vertices`, via Bron-Kerbosch with Tomita pivoting. The result
/// is sorted ascending. An empty vertex set has the single clique {}.
std::vector<SubsetMask> maximal_cliques(std::span<const SubsetMask> adj, SubsetMask vertices);

}  // namespace posetlogic::detail
