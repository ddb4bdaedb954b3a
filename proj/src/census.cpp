#include "posetlogic/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "posetlogic/bridges.hpp"
#include "posetlogic/logic.hpp"
#include "posetlogic/structure.hpp"

namespace posetlogic {

namespace {

void check_census_n(int n, const Limits& limits) {
  const int cap = std::min(limits.max_census_n, kMaxEnumerationN);
  if (n < 0 || n > cap) {
    throw SizeLimitError("labeled enumeration refused for n = " + std::to_string(n) + " (cap " +
                         std::to_string(cap) + ")");
  }
}

// Returns false once `visit` asks to stop.
bool extend(const Poset& prefix, int n, const std::function<bool(const Poset&)>& visit) {
  const int k = prefix.size();
  if (k == n) return visit(prefix);

  const std::uint64_t subsets = std::uint64_t{1} << k;
  std::vector<SubsetMask> down_sets;
  std::vector<SubsetMask> up_sets;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const SubsetMask s(bits);
    bool down = true;
    bool up = true;
    for (int x : s) {
      down = down && prefix.below(x).subset_of(s);
      up = up && prefix.above(x).subset_of(s);
    }
    if (down) down_sets.push_back(s);
    if (up) up_sets.push_back(s);
  }

  std::vector<SubsetMask> rows(k + 1);
  for (SubsetMask d : down_sets) {
    SubsetMask common = SubsetMask::full(k);
    for (int x : d) common &= prefix.above(x);
    for (SubsetMask u : up_sets) {
      if (!u.subset_of(common)) continue;
      for (int x = 0; x < k; ++x) rows[x] = d.contains(x) ? prefix.above(x).with(k) : prefix.above(x);
      rows[k] = u;
      if (!extend(Poset::from_closed_rows(rows), n, visit)) return false;
    }
  }
  return true;
}

int shard_prefix_size(int n) { return std::max(0, n - 2); }

std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge_prob must lie in [0, 1]");
}

}  // namespace

void for_each_labeled_poset(int n, const std::function<void(const Poset&)>& visit,
                            const Limits& limits) {
  check_census_n(n, limits);
  extend(Poset{}, n, [&](const Poset& p) {
    visit(p);
    return true;
  });
}

std::vector<Poset> enumerate_labeled_posets(int n, const Limits& limits) {
  std::vector<Poset> out;
  for_each_labeled_poset(n, [&](const Poset& p) { out.push_back(p); }, limits);
  return out;
}

Poset random_poset(int n, std::uint64_t seed, double edge_prob) {
  check_probability(edge_prob);
  if (n < 0 || n > kMaxElements) throw SizeLimitError("random poset size out of range");
  auto rng = make_engine(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < edge_prob) relations.emplace_back(perm[i], perm[j]);
    }
  }
  return Poset::from_covers(n, relations, Limits{.max_poset_elements = kMaxElements});
}

Orthoset random_orthoset(int n, std::uint64_t seed, double edge_prob) {
  check_probability(edge_prob);
  auto rng = make_engine(seed);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (unit(rng) < edge_prob) edges.emplace_back(x, y);
    }
  }
  return Orthoset::from_edges(n, edges);
}

std::optional<std::string> check_ud_partition(const Poset& p, const Limits& limits) {
  const Orthoset o = incomparability_orthoset(p);
  for (SubsetMask x : enumerate_orthoclosed(o, limits)) {
    const UpDown ud = ud_decomposition(p, x);
    const SubsetMask rest = o.universe() - x - perp(o, x);
    if (ud.up.intersects(ud.down) || (ud.up | ud.down) != rest) {
      return "up/down sets do not partition the remainder of X = " + to_string(x, &p.labels());
    }
  }
  return std::nullopt;
}

TheoremCheck verify_theorems(const Poset& p, const Limits& limits) {
  TheoremCheck r;
  auto& v = r.violations;

  const auto n_witness = find_n(p);
  const auto covering_witness = find_covering_n(p);
  const auto weak_witness = find_weak_n(p);
  r.n_free = !n_witness;
  r.covering_n_free = !covering_witness;
  r.weak_n_free = !weak_witness;
  if (n_witness && !forms(p, NWitness::Kind::kN, n_witness->quad)) v.emplace_back("N witness does not re-validate");
  if (covering_witness && !forms(p, NWitness::Kind::kCoveringN, covering_witness->quad)) {
    v.emplace_back("covering N witness does not re-validate");
  }
  if (weak_witness && !forms(p, NWitness::Kind::kWeakN, weak_witness->quad)) {
    v.emplace_back("weak N witness does not re-validate");
  }
  r.chain_antichain = chain_antichain_property(p, limits);

  const Orthoset o = incomparability_orthoset(p);
  try {
    r.dacey = is_dacey(o, limits).dacey;
    r.compatible = is_compatible(o, limits).compatible;
    const Logic logic = build_logic(o, limits);
    if (const LawCheck laws = verify_ortholattice(logic); !laws.ok) {
      v.push_back("logic fails ortholattice law " + laws.failed_law);
    }
    r.orthomodular = is_orthomodular(logic).orthomodular;
    r.boolean = is_boolean(logic).boolean;
  } catch (const std::logic_error& e) {
    v.push_back(std::string("internal consistency: ") + e.what());
  }
  if (auto ud = check_ud_partition(p, limits)) v.push_back(*ud);

  if (r.n_free != r.dacey) v.emplace_back("N-free != Dacey");
  if (r.n_free != r.orthomodular) v.emplace_back("N-free != orthomodular");
  if (r.dacey != r.orthomodular) v.emplace_back("Dacey != orthomodular");
  if (r.weak_n_free != r.compatible) v.emplace_back("weak-N-free != compatible");
  if (r.weak_n_free != r.boolean) v.emplace_back("weak-N-free != Boolean");
  if (r.compatible != r.boolean) v.emplace_back("compatible != Boolean");
  if (r.n_free != r.chain_antichain) v.emplace_back("N-free != chain-antichain property");
  if (r.n_free != r.covering_n_free) v.emplace_back("N-free != covering-N-free");
  if (r.boolean && !r.orthomodular) v.emplace_back("Boolean but not orthomodular");
  if (!r.n_free && r.weak_n_free) v.emplace_back("weak-N-free but not N-free");
  return r;
}

void CensusSummary::merge(const CensusSummary& other) {
  total_posets += other.total_posets;
  n_free += other.n_free;
  covering_n_free += other.covering_n_free;
  weak_n_free += other.weak_n_free;
  chain_antichain += other.chain_antichain;
  dacey += other.dacey;
  compatible += other.compatible;
  orthomodular += other.orthomodular;
  boolean += other.boolean;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::stable_sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.shard, a.index) < std::tie(b.shard, b.index);
  });
}

std::size_t census_shard_count(int n, const Limits& limits) {
  check_census_n(n, limits);
  std::size_t count = 0;
  for_each_labeled_poset(shard_prefix_size(n), [&](const Poset&) { ++count; }, limits);
  return count;
}

namespace {

CensusSummary summarize_extensions(int n, std::size_t shard, const Poset& prefix,
                                   const Limits& limits) {
  CensusSummary s;
  s.n = n;
  extend(prefix, n, [&](const Poset& p) {
    const TheoremCheck c = verify_theorems(p, limits);
    s.n_free += c.n_free;
    s.covering_n_free += c.covering_n_free;
    s.weak_n_free += c.weak_n_free;
    s.chain_antichain += c.chain_antichain;
    s.dacey += c.dacey;
    s.compatible += c.compatible;
    s.orthomodular += c.orthomodular;
    s.boolean += c.boolean;
    for (const auto& msg : c.violations) {
      s.violations.push_back({n, shard, s.total_posets, p.cover_pairs(), msg});
    }
    ++s.total_posets;
    return true;
  });
  return s;
}

}  // namespace

CensusSummary run_census_shard(int n, std::size_t shard, const Limits& limits) {
  check_census_n(n, limits);
  std::optional<Poset> prefix;
  std::size_t seen = 0;
  extend(Poset{}, shard_prefix_size(n), [&](const Poset& p) {
    if (seen++ == shard) {
      prefix = p;
      return false;
    }
    return true;
  });
  if (!prefix) throw std::out_of_range("census shard " + std::to_string(shard) + " does not exist");
  return summarize_extensions(n, shard, *prefix, limits);
}

std::vector<CensusSummary> census_run(int max_n, int workers, const Limits& limits) {
  check_census_n(max_n, limits);
  workers = std::max(1, workers);
  std::vector<CensusSummary> out;
  for (int n = 0; n <= max_n; ++n) {
    const std::vector<Poset> prefixes = enumerate_labeled_posets(shard_prefix_size(n), limits);
    const std::size_t shards = prefixes.size();
    std::vector<CensusSummary> parts(shards);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
      try {
        for (std::size_t s = next++; s < shards; s = next++) {
          parts[s] = summarize_extensions(n, s, prefixes[s], limits);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = shards;
      }
    };
    {
      std::vector<std::jthread> pool;
      for (int w = 1; w < workers; ++w) pool.emplace_back(work);
      work();
    }
    if (error) std::rethrow_exception(error);

    CensusSummary total;
    total.n = n;
    for (const auto& part : parts) total.merge(part);
    out.push_back(std::move(total));
  }
  return out;
}

SearchPredicate parse_search_predicate(const std::string& name) {
  if (name == "nfree_but_strict_not_dacey") return SearchPredicate::kNFreeButStrictNotDacey;
  if (name == "strict_dacey") return SearchPredicate::kStrictDacey;
  throw std::invalid_argument("unknown search predicate '" + name + "'");
}

std::string to_string(SearchPredicate predicate) {
  switch (predicate) {
    case SearchPredicate::kNFreeButStrictNotDacey: return "nfree_but_strict_not_dacey";
    case SearchPredicate::kStrictDacey: return "strict_dacey";
  }
  return "?";
}

bool satisfies(const Poset& p, SearchPredicate predicate, const Limits& limits) {
  switch (predicate) {
    case SearchPredicate::kNFreeButStrictNotDacey:
      return is_n_free(p) && !is_dacey(strict_comparability_orthoset(p), limits).dacey;
    case SearchPredicate::kStrictDacey:
      return is_dacey(strict_comparability_orthoset(p), limits).dacey;
  }
  return false;
}

std::vector<Poset> search_all(SearchPredicate predicate, int max_n, std::size_t limit,
                              const Limits& limits) {
  check_census_n(max_n, limits);
  std::vector<Poset> hits;
  for (int n = 0; n <= max_n && hits.size() < limit; ++n) {
    extend(Poset{}, n, [&](const Poset& p) {
      if (satisfies(p, predicate, limits)) hits.push_back(p);
      return hits.size() < limit;
    });
  }
  return hits;
}

std::optional<Poset> search_counterexample(SearchPredicate predicate, int max_n,
                                           const Limits& limits) {
  auto hits = search_all(predicate, max_n, 1, limits);
  if (hits.empty()) return std::nullopt;
  return std::move(hits.front());
}

}  // namespace posetlogic
