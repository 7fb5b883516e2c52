#include <doctest.h>

#include "monoidp/gluing.hpp"
#include "monoidp/lattice.hpp"
#include "monoidp/presentations.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace monoidp;
using testutil::error_of;

namespace {

AffineSemigroup sample_affine() {
  return AffineSemigroup(2, {{2, 0}, {0, 3}, {2, 1}, {1, 2}});
}

std::vector<Vec> as_vecs(std::vector<Int> const& xs) { return lift(xs); }

}  // namespace

TEST_CASE("hermite normal form") {
  CHECK(hnf({{2, 0}, {0, 3}, {2, 1}}, 2).basis() == std::vector<Vec>{{2, 0}, {0, 1}});
  CHECK(hnf({{1, 2}}, 2).basis() == std::vector<Vec>{{1, 2}});
  CHECK(hnf({{2, 4}, {1, 2}}, 2).basis() == std::vector<Vec>{{1, 2}});
  CHECK(hnf({{-3, 6}}, 2).basis() == std::vector<Vec>{{3, -6}});
  CHECK(hnf({{0, 0}}, 2).rank() == 0);
  CHECK(hnf({{6}, {10}, {15}}, 1).basis() == std::vector<Vec>{{1}});
  CHECK(hnf({{4, 6}, {6, 9}}, 2).basis() == std::vector<Vec>{{2, 3}});
  auto l = hnf({{2, 0}, {0, 3}, {2, 1}}, 2);
  CHECK(l.contains({4, 7}));
  CHECK_FALSE(l.contains({1, 0}));
  CHECK(error_of([] { hnf({{1, 2, 3}}, 2); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("lattice intersections") {
  auto l1 = lattice_of({{2, 0}, {0, 3}, {2, 1}}, 2);
  auto l2 = lattice_of({{1, 2}}, 2);
  auto i  = lattice_intersection(l1, l2);
  CHECK(i.rank() == 1);
  CHECK(i.basis() == std::vector<Vec>{{2, 4}});

  auto j = lattice_intersection(lattice_of({{2, 0}, {0, 3}}, 2), lattice_of({{2, 1}}, 2));
  CHECK(j.basis() == std::vector<Vec>{{6, 3}});

  auto k = lattice_intersection(lattice_of({{2}}, 1), lattice_of({{21}}, 1));
  CHECK(k.basis() == std::vector<Vec>{{42}});

  auto none = lattice_intersection(lattice_of({{1, 0}}, 2), lattice_of({{0, 1}}, 2));
  CHECK(none.rank() == 0);
  CHECK(error_of([] {
          lattice_intersection(IntegerLattice(2), IntegerLattice(3));
        })
        == ErrorCode::DimensionMismatch);
}

TEST_CASE("hnf is canonical and spans the input rows") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<Int> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> rows(count(rng));
    for (Vec& r : rows) r = {entry(rng), entry(rng)};
    auto l = hnf(rows, 2);
    CHECK(hnf(l.basis(), 2) == l);

    // a permuted, unimodularly mixed copy gives the same form
    std::vector<Vec> mixed(rows.rbegin(), rows.rend());
    if (mixed.size() >= 2) mixed[0] = add(mixed[0], scale(3, mixed[1]));
    CHECK(hnf(mixed, 2) == l);

    // echelon shape
    auto const& b = l.basis();
    if (b.size() == 2) {
      CHECK(b[0][0] > 0);
      CHECK(b[1][0] == 0);
      CHECK(b[1][1] > 0);
      CHECK(b[0][1] >= 0);
      CHECK(b[0][1] < b[1][1]);
    }

    auto span = oracle::span_in_box(rows, 6, 8);
    for (Int x = -8; x <= 8; ++x) {
      for (Int y = -8; y <= 8; ++y) {
        // the oracle may miss points needing large coefficients, never the
        // other way round
        if (span.contains(Vec{x, y})) CHECK(l.contains({x, y}));
      }
    }
    for (Vec const& r : rows) CHECK(l.contains(r));
    // determinantal divisors pin the lattice down: gcd of the 2x2 minors
    // (rank 2) or of the entries (rank 1)
    Int minors = 0, entries = 0;
    for (Vec const& r : rows) {
      entries = std::gcd(entries, std::gcd(r[0], r[1]));
      for (Vec const& t : rows) minors = std::gcd(minors, r[0] * t[1] - r[1] * t[0]);
    }
    if (b.size() == 2) CHECK(b[0][0] * b[1][1] == minors);
    if (b.size() == 1) CHECK(std::gcd(b[0][0], b[0][1]) == entries);
  }
}

TEST_CASE("intersection is commutative and exact on a box") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Int> entry(-10, 10);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Vec> r1{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    std::vector<Vec> r2{{entry(rng), entry(rng)}};
    auto l1 = hnf(r1, 2);
    auto l2 = hnf(r2, 2);
    auto a  = lattice_intersection(l1, l2);
    CHECK(a == lattice_intersection(l2, l1));
    for (Vec const& v : a.basis()) {
      CHECK(l1.contains(v));
      CHECK(l2.contains(v));
    }
    for (Int x = -50; x <= 50; ++x) {
      for (Int y = -50; y <= 50; ++y) {
        Vec v{x, y};
        REQUIRE(a.contains(v) == (l1.contains(v) && l2.contains(v)));
      }
    }
  }
}

TEST_CASE("checking one partition") {
  auto s = sample_affine();
  auto g = check_gluing(s, {0, 1, 2});
  REQUIRE(g);
  CHECK(g->d == Vec{2, 4});
  CHECK(g->part2 == std::vector<std::size_t>{3});
  CHECK(g->u == Factorization{{0, 1, 1}});
  CHECK(g->v == Factorization{{2}});

  auto n = check_gluing(AffineSemigroup(1, as_vecs({4, 6, 21})), {0, 1});
  REQUIRE(n);
  CHECK(n->d == Vec{42});

  CHECK_FALSE(check_gluing(AffineSemigroup(2, {{1, 0}, {0, 1}}), {0}));
  CHECK(error_of([&] { check_gluing(s, {}); }) == ErrorCode::InvalidParams);
  CHECK(error_of([&] { check_gluing(s, {0, 1, 2, 3}); }) == ErrorCode::InvalidParams);
  CHECK(error_of([&] { check_gluing(s, {0, 7}); }) == ErrorCode::InvalidParams);
  CHECK(error_of([&] { check_gluing(s, {1, 1}); }) == ErrorCode::InvalidParams);
}

TEST_CASE("finding gluings") {
  // each of the three splits of <6,10,15> glues at 30
  auto g = find_gluings(AffineSemigroup(1, as_vecs({6, 10, 15})));
  REQUIRE(g.size() == 3);
  for (auto const& dec : g) {
    CHECK(dec.d == Vec{30});
    CHECK(betti_via_gluing(dec, {}, {}) == std::vector<Vec>{{30}});
  }

  auto g23 = find_gluings(AffineSemigroup(1, as_vecs({2, 3})));
  REQUIRE(g23.size() == 1);
  CHECK(g23[0].part1 == std::vector<std::size_t>{0});
  CHECK(g23[0].d == Vec{6});

  auto ga = find_gluings(sample_affine());
  CHECK(std::any_of(ga.begin(), ga.end(), [](auto const& dec) {
    return dec.part1 == std::vector<std::size_t>{0, 1, 2} && dec.d == Vec{2, 4};
  }));

  std::vector<Int> many;
  for (Int k = 0; k < 15; ++k) many.push_back(100 + k);
  CHECK(error_of([&] { find_gluings(AffineSemigroup(1, as_vecs(many))); })
        == ErrorCode::TooManyGenerators);
  CHECK(find_gluings(AffineSemigroup(1, as_vecs({5}))).empty());
}

TEST_CASE("betti sets through a gluing") {
  auto g = check_gluing(AffineSemigroup(1, as_vecs({4, 6, 21})), {0, 1});
  REQUIRE(g);
  CHECK(betti_via_gluing(*g, {{12}}, {}) == std::vector<Vec>{{12}, {42}});

  auto ga = check_gluing(sample_affine(), {0, 1, 2});
  REQUIRE(ga);
  CHECK(betti_via_gluing(*ga, {{6, 3}}, {}) == std::vector<Vec>{{2, 4}, {6, 3}});
}

TEST_CASE("uniqueness through a gluing") {
  NumericalSemigroup s({4, 6, 21});
  auto g = check_gluing(as_affine(s), {0, 1});
  REQUIRE(g);
  CHECK_FALSE(d_has_unique_presentation(s, *g, {{12}}, {}));
  CHECK_FALSE(uniquely_presented_via_gluing(s, *g, {true, {{12}}}, {true, {}}));

  auto a  = sample_affine();
  auto ga = check_gluing(a, {0, 1, 2});
  REQUIRE(ga);
  CHECK(d_has_unique_presentation(a, *ga, {{6, 3}}, {}));

  // the first part is itself the gluing <(2,0),(0,3)> + <(2,1)> at (6,3)
  AffineSemigroup s1(2, {{2, 0}, {0, 3}, {2, 1}});
  auto g1 = check_gluing(s1, {0, 1});
  REQUIRE(g1);
  CHECK(g1->d == Vec{6, 3});
  bool s1_unique = uniquely_presented_via_gluing(s1, *g1, {true, {}}, {true, {}});
  CHECK(s1_unique);
  CHECK(uniquely_presented_via_gluing(a, *ga, {s1_unique, {{6, 3}}}, {true, {}}));

  NumericalSemigroup s23({2, 3});
  auto g23 = check_gluing(as_affine(s23), {0});
  REQUIRE(g23);
  CHECK(d_has_unique_presentation(s23, *g23, {}, {}));
  CHECK(uniquely_presented_via_gluing(s23, *g23, {true, {}}, {true, {}}));
}

TEST_CASE("numerical gluing construction") {
  auto g = glue_numerical(NumericalSemigroup({2, 3}), 2, 5);
  CHECK(g.semigroup.minimal_generators() == std::vector<Int>{4, 5, 6});
  CHECK(g.decomposition.d == Vec{10});
  CHECK(betti_elements(g.semigroup) == std::vector<Int>{10, 12});

  CHECK(error_of([] { glue_numerical(NumericalSemigroup({2, 3}), 2, 2); })
        == ErrorCode::InvalidGluing);
  CHECK(error_of([] { glue_numerical(NumericalSemigroup({2, 3}), 1, 5); })
        == ErrorCode::InvalidGluing);
  CHECK(error_of([] { glue_numerical(NumericalSemigroup({2, 3}), 2, 1); })
        == ErrorCode::InvalidGluing);
  CHECK(error_of([] { glue_numerical(NumericalSemigroup({2, 3}), 3, 3); })
        == ErrorCode::InvalidGluing);
  auto h = glue_numerical(NumericalSemigroup({2, 3}), 2, 7);
  CHECK(h.semigroup.minimal_generators() == std::vector<Int>{4, 6, 7});
}

TEST_CASE("factorizations of d stay inside one part") {
  for (auto const& s : oracle::random_semigroups(60, 43, 4, 20)) {
    for (Int lambda : {2, 3}) {
      for (Int mu = s.multiplicity() + 1; mu <= s.max_generator() + 5; ++mu) {
        std::optional<NumericalGluing> g;
        try {
          g = glue_numerical(s, lambda, mu);
        } catch (Error const&) {
          continue;
        }
        auto const& dec = g->decomposition;
        auto fs = factorizations(g->semigroup, dec.d[0]);
        // generator order of the glued semigroup is sorted; map back
        std::vector<Int> const& sorted = g->semigroup.minimal_generators();
        for (auto const& u : fs.factorizations()) {
          bool in1 = false, in2 = false;
          for (std::size_t k = 0; k < u.size(); ++k) {
            if (u[k] == 0) continue;
            (sorted[k] == mu ? in2 : in1) = true;
          }
          CHECK_FALSE((in1 && in2));
        }
      }
    }
  }
}
