#include <doctest.h>

#include "monoidp/factorizations.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace monoidp;
using testutil::error_of;
using testutil::exponents;
using Rows = std::vector<std::vector<Int>>;

TEST_CASE("factorizations of the golden elements") {
  CHECK(exponents(enumerate_factorizations(std::vector<Int>{6, 10, 15}, 30))
        == Rows{{5, 0, 0}, {0, 3, 0}, {0, 0, 2}});
  CHECK(exponents(enumerate_factorizations(std::vector<Int>{4, 6, 21}, 42))
        == Rows{{9, 1, 0}, {6, 3, 0}, {3, 5, 0}, {0, 7, 0}, {0, 0, 2}});
  CHECK(exponents(enumerate_factorizations(std::vector<Int>{4, 6, 21}, 0))
        == Rows{{0, 0, 0}});
  CHECK(exponents(factorizations(NumericalSemigroup({2, 3, 4}), 4))
        == Rows{{2, 0}});
}

TEST_CASE("counting") {
  CHECK(count_factorizations(std::vector<Int>{4, 6, 21}, 42) == 5);
  CHECK(count_factorizations(std::vector<Int>{4, 6, 21}, 12) == 2);
  CHECK(count_factorizations(std::vector<Int>{2, 3}, 1) == 0);
  CHECK(count_factorizations(std::vector<Int>{2, 3}, -1) == 0);
  CHECK(count_factorizations(std::vector<Vec>{{2, 0}, {0, 3}, {2, 1}, {1, 2}},
                             Vec{6, 3})
        == 2);
}

TEST_CASE("vector factorizations") {
  std::vector<Vec> atoms{{2, 0}, {0, 3}, {2, 1}, {1, 2}};
  CHECK(exponents(enumerate_factorizations(atoms, Vec{2, 4}))
        == Rows{{0, 1, 1, 0}, {0, 0, 0, 2}});
  // (6,3) = 3(2,0) + (0,3) = 3(2,1)
  CHECK(exponents(enumerate_factorizations(atoms, Vec{6, 3}))
        == Rows{{3, 1, 0, 0}, {0, 0, 3, 0}});
  CHECK(enumerate_factorizations(atoms, Vec{1, 0}).empty());
  AffineSemigroup s(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(exponents(factorizations(s, Vec{1, 1})) == Rows{{1, 1}});
}

TEST_CASE("errors") {
  CHECK(error_of([] { enumerate_factorizations(std::vector<Int>{}, 3); })
        == ErrorCode::EmptyInput);
  CHECK(error_of([] { enumerate_factorizations(std::vector<Int>{0, 3}, 3); })
        == ErrorCode::ZeroGenerator);
  CHECK(error_of([] {
          enumerate_factorizations(std::vector<Vec>{{1, 0}}, Vec{1, 0, 0});
        })
        == ErrorCode::DimensionMismatch);
  CHECK(error_of([] {
          FactorizationSet(lift({2, 3}), Vec{5}, {Factorization{{1, 0}}});
        })
        .has_value());
  CHECK(error_of([] {
          Int big = Int{1} << 62;
          evaluate(lift({big}), Factorization{{4}});
        })
        == ErrorCode::ArithmeticOverflow);
}

TEST_CASE("r-classes of the golden elements") {
  auto fs30 = enumerate_factorizations(std::vector<Int>{6, 10, 15}, 30);
  auto p30  = r_classes(fs30);
  CHECK(p30.size() == 3);
  for (auto const& c : p30.classes) CHECK(c.members.size() == 1);

  auto fs42 = enumerate_factorizations(std::vector<Int>{4, 6, 21}, 42);
  auto p42  = r_classes(fs42);
  REQUIRE(p42.size() == 2);
  CHECK(p42.classes[0].members == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(p42.classes[1].members == std::vector<std::size_t>{4});
  CHECK(p42.classes[0].tree.size() == 3);

  auto single = enumerate_factorizations(std::vector<Int>{2, 3}, 5);
  CHECK(r_classes(single).size() == 1);
}

TEST_CASE("enumeration agrees with the nested-loop oracle") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick_r(1, 5);
  std::uniform_int_distribution<Int> pick_atom(1, 30);
  std::uniform_int_distribution<Int> pick_target(0, 200);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> atoms(pick_r(rng));
    for (Int& a : atoms) a = pick_atom(rng);
    if (atoms.size() >= 4) {
      for (Int& a : atoms) a = std::max<Int>(a, 6);
    }
    Int target = pick_target(rng);
    auto fs    = enumerate_factorizations(atoms, target);
    REQUIRE(exponents(fs) == oracle::factorizations(atoms, target));
    CHECK(count_factorizations(atoms, target) == fs.size());
    for (auto const& u : fs.factorizations()) {
      CHECK(evaluate(lift(atoms), u) == Vec{target});
    }
  }
}

TEST_CASE("vector enumeration agrees with the box oracle") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<Int> coord(0, 4);
  for (int trial = 0; trial < 120; ++trial) {
    std::set<Vec> set;
    while (set.size() < 4) {
      Vec v{coord(rng), coord(rng)};
      if (v != Vec{0, 0}) set.insert(v);
    }
    std::vector<Vec> atoms(set.begin(), set.end());
    Vec target{coord(rng) * 3, coord(rng) * 3};
    REQUIRE(exponents(enumerate_factorizations(atoms, target))
            == oracle::factorizations(atoms, target));
  }
}

TEST_CASE("r-classes form a partition with spanning trees") {
  for (auto const& s : oracle::random_semigroups(100, 23)) {
    for (Int n = s.multiplicity(); n <= s.frobenius() + 2 * s.max_generator();
         n += 3) {
      auto fs   = factorizations(s, n);
      auto part = r_classes(fs);
      std::vector<int> owner(fs.size(), -1);
      for (std::size_t c = 0; c < part.size(); ++c) {
        auto const& cls = part.classes[c];
        REQUIRE_FALSE(cls.members.empty());
        for (std::size_t k : cls.members) {
          REQUIRE(owner[k] == -1);
          owner[k] = static_cast<int>(c);
        }
        // tree: |members| - 1 edges, each a nonzero dot product, connecting
        CHECK(cls.tree.size() + 1 == cls.members.size());
        std::set<std::size_t> reached{cls.members.front()};
        for (int pass = 0; pass < static_cast<int>(cls.tree.size()) + 1; ++pass) {
          for (auto [a, b] : cls.tree) {
            CHECK(dot(fs[a], fs[b]) != 0);
            if (reached.contains(a) || reached.contains(b)) {
              reached.insert(a);
              reached.insert(b);
            }
          }
        }
        CHECK(reached.size() == cls.members.size());
      }
      for (int o : owner) REQUIRE(o >= 0);
      // no nonzero dot product crosses classes
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          if (owner[i] != owner[j]) CHECK(dot(fs[i], fs[j]) == 0);
        }
      }
      // same partition as the all-pairs oracle
      std::set<std::set<std::vector<Int>>> mine;
      for (auto const& cls : part.classes) {
        std::set<std::vector<Int>> set;
        for (std::size_t k : cls.members) set.insert(fs[k].exponents);
        mine.insert(set);
      }
      CHECK(mine == oracle::r_classes(exponents(fs)));
    }
  }
}

TEST_CASE("scaling equivariance") {
  for (auto const& s : oracle::random_semigroups(100, 24)) {
    auto const& gens = s.minimal_generators();
    for (Int lambda : {2, 3, 7}) {
      std::vector<Int> scaled;
      for (Int g : gens) scaled.push_back(lambda * g);
      for (Int t : {s.frobenius() + 1, 2 * s.max_generator(), Int{60}}) {
        CHECK(exponents(enumerate_factorizations(scaled, lambda * t))
              == exponents(enumerate_factorizations(gens, t)));
      }
    }
  }
}
