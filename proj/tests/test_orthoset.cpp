#include <doctest.h>

#include "oracles.hpp"
#include "posetlogic/bridges.hpp"
#include "posetlogic/census.hpp"
#include "posetlogic/orthoset.hpp"

using namespace posetlogic;

namespace {

// The 4-path 1-2-3-4, stored on indices 0..3.
Orthoset p4() { return Orthoset::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }

Orthoset complete(int n) { return incomparability_orthoset(antichain(n)); }

// Elements 1..4 of the path, as masks.
SubsetMask path(std::initializer_list<int> one_based) {
  SubsetMask s;
  for (int x : one_based) s = s.with(x - 1);
  return s;
}

std::vector<std::uint64_t> bits_of(const std::vector<SubsetMask>& family) {
  std::vector<std::uint64_t> out;
  for (auto s : family) out.push_back(s.bits());
  return out;
}

}  // namespace

TEST_CASE("perp on the 4-path") {
  const Orthoset o = p4();
  CHECK(perp(o, path({3})) == path({2, 4}));
  CHECK(perp(o, path({1, 3})) == path({2}));
  CHECK(perp(o, {}) == o.universe());
  CHECK(perp(complete(3), {}) == SubsetMask{0, 1, 2});
}

TEST_CASE("double perp and closedness on the 4-path") {
  const Orthoset o = p4();
  CHECK(double_perp(o, path({1, 3})) == path({1, 3}));
  CHECK(is_orthoclosed(o, path({1, 3})));
  CHECK(double_perp(o, path({1})) == path({1, 3}));
  CHECK_FALSE(is_orthoclosed(o, path({1})));
}

TEST_CASE("enumerate_orthoclosed: frozen examples") {
  // Oracle output for the 4-path: {}, {2}, {3}, {1,3}, {2,4}, O.
  const auto closed = enumerate_orthoclosed(p4());
  CHECK(closed == std::vector{SubsetMask{}, path({2}), path({3}), path({1, 3}), path({2, 4}),
                              path({1, 2, 3, 4})});
  CHECK(bits_of(closed) == oracle::orthoclosed(p4()));

  for (int n = 2; n <= 6; ++n) {
    const Orthoset edgeless = incomparability_orthoset(chain(n));
    CHECK(enumerate_orthoclosed(edgeless) == std::vector{SubsetMask{}, SubsetMask::full(n)});
  }
  CHECK(enumerate_orthoclosed(complete(3)).size() == 8);
  CHECK(enumerate_orthoclosed(Orthoset{}) == std::vector{SubsetMask{}});
}

TEST_CASE("enumerate_orthoclosed honours its caps") {
  CHECK_THROWS_AS(enumerate_orthoclosed(complete(21)), SizeLimitError);
  CHECK_THROWS_AS(enumerate_orthoclosed(complete(12), Limits{.max_family = 1000}), SizeLimitError);
  // The complete graph on 20 vertices has every subset closed.
  CHECK(enumerate_orthoclosed(complete(20)).size() == (std::size_t{1} << 20));
}

TEST_CASE("bases") {
  const Orthoset o = p4();
  CHECK(bases(o, path({1, 3})) == std::vector{path({1}), path({3})});
  CHECK(bases(complete(3), SubsetMask{0, 1, 2}) == std::vector{SubsetMask{0, 1, 2}});
  CHECK(bases(o, {}) == std::vector{SubsetMask{}});
  // Maximal pairwise orthogonal subsets of the whole path are its edges.
  CHECK(bases(o, o.universe()) == std::vector{path({1, 2}), path({2, 3}), path({3, 4})});
  CHECK(bits_of(bases(o, o.universe())) == oracle::bases(o, o.universe().bits()));
}

TEST_CASE("Dacey on the named orthosets") {
  const Orthoset o = p4();
  CHECK_FALSE(is_dacey_subset(o, path({1, 3})));
  const DaceyResult r = is_dacey(o);
  CHECK_FALSE(r.dacey);
  REQUIRE(r.witness);
  CHECK(r.witness->first == path({1, 3}));
  CHECK(r.witness->second == path({3}));
  CHECK_FALSE(perp(o, path({3})).subset_of(perp(o, path({1, 3}))));

  CHECK(is_dacey(complete(3)).dacey);
  CHECK(oracle::is_dacey(complete(3)));
  CHECK(is_dacey(incomparability_orthoset(chain(4))).dacey);
  CHECK(is_dacey(Orthoset{}).dacey);
  CHECK_THROWS_AS(is_dacey(complete(21)), SizeLimitError);
}

TEST_CASE("compatibility on the named orthosets") {
  const auto k4 = is_compatible(complete(4));
  CHECK(k4.compatible);
  CHECK_FALSE(k4.witness);

  // 1 and 4 are non-orthogonal; x^perp u y^perp = {2, 3} and no element is
  // orthogonal to both 2 and 3. The pair (1, 3) does have z = 2.
  const auto path_result = is_compatible(p4());
  CHECK_FALSE(path_result.compatible);
  CHECK(path_result.witness == std::make_pair(0, 3));

  // Cross pairs of the two diamond edges a-b and c-d all fail; (a, c) is first.
  const auto diamond = is_compatible(incomparability_orthoset(diamond22()));
  CHECK_FALSE(diamond.compatible);
  CHECK(diamond.witness == std::make_pair(0, 2));
  CHECK(is_compatible(Orthoset{}).compatible);
}

TEST_CASE("orthocomplement pair check") {
  const Orthoset o = p4();
  CHECK(orthocomplement_pair_check(o, path({1, 3}), path({2})));
  CHECK_FALSE(orthocomplement_pair_check(o, path({1}), path({2})));
  CHECK(orthocomplement_pair_check(o, {}, o.universe()));
}

TEST_CASE("closure operator properties on random orthosets") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const Orthoset o = random_orthoset(n, seed, 0.15 + 0.7 * static_cast<double>(seed % 5) / 5.0);
    const auto s = SubsetMask((seed * 0x9E3779B97F4A7C15ULL) >> 7) & o.universe();
    const auto t = s | (SubsetMask(seed * 0xBF58476D1CE4E5B9ULL) & o.universe());
    CAPTURE(seed);
    CHECK(perp(o, t).subset_of(perp(o, s)));
    CHECK(s.subset_of(double_perp(o, s)));
    CHECK(perp(o, s) == perp(o, double_perp(o, s)));
    CHECK(is_orthoclosed(o, perp(o, s)));
    // s' lies in the closure of X iff everything orthogonal to X is orthogonal to s'.
    const SubsetMask closure = double_perp(o, s);
    for (int e = 0; e < n; ++e) {
      bool membership = true;
      for (int a = 0; a < n; ++a) {
        if (perp(o, s).contains(a) && !o.orthogonal(e, a)) membership = false;
      }
      CHECK(closure.contains(e) == membership);
    }
  }
}

TEST_CASE("random orthosets: enumeration, Dacey and compatibility against oracles") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = static_cast<int>(seed % 10);
    const Orthoset o = random_orthoset(n, seed, 0.2 + 0.6 * static_cast<double>(seed % 4) / 4.0);
    CAPTURE(seed);
    const auto closed = enumerate_orthoclosed(o);
    CHECK(bits_of(closed) == oracle::orthoclosed(o));
    for (SubsetMask x : closed) {
      CHECK(bits_of(bases(o, x)) == oracle::bases(o, x.bits()));
      const bool a = is_dacey_subset(o, x, DaceyCriterion::kClosureOfBasis);
      CHECK(is_dacey_subset(o, x, DaceyCriterion::kEqualComplement) == a);
      CHECK(is_dacey_subset(o, x, DaceyCriterion::kPerpInclusion) == a);
      for (SubsetMask y : closed) {
        CHECK(orthocomplement_pair_check(o, x, y) == (y == perp(o, x)));
      }
    }
    CHECK(is_dacey(o).dacey == oracle::is_dacey(o));
    const bool compatible = is_compatible(o).compatible;
    CHECK(compatible == oracle::is_compatible(o));
    if (compatible) CHECK(is_dacey(o).dacey);
  }
}

TEST_CASE("orthoset construction") {
  CHECK_THROWS_AS(Orthoset::from_edges(2, {{0, 2}}), IndexError);
  CHECK_THROWS_AS(Orthoset::from_edges(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Orthoset::from_rows({SubsetMask{1}, SubsetMask{}}), std::invalid_argument);
  const Orthoset o = p4();
  CHECK(o.complement().complement() == o);
  CHECK(o.orthogonal(1, 0));
}
