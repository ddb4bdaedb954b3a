#include "posetlogic/detail/cliques.hpp"

#include <algorithm>

namespace posetlogic::detail {
namespace {

struct BronKerbosch {
  std::span<const SubsetMask> adj;
  std::vector<SubsetMask> out;

  void expand(SubsetMask r, SubsetMask p, SubsetMask x) {
    if (p.empty()) {
      if (x.empty()) out.push_back(r);
      return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    int pivot = -1;
    int best = -1;
    for (int u : p | x) {
      int deg = (p & adj[u]).size();
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    for (int v : p - adj[pivot]) {
      expand(r.with(v), p & adj[v], x & adj[v]);
      p = p.without(v);
      x = x.with(v);
    }
  }
};

}  // namespace

std::vector<SubsetMask> maximal_cliques(std::span<const SubsetMask> adj, SubsetMask vertices) {
  BronKerbosch bk{adj, {}};
  bk.expand(SubsetMask{}, vertices, SubsetMask{});
  std::sort(bk.out.begin(), bk.out.end());
  return std::move(bk.out);
}

}  // namespace posetlogic::detail
