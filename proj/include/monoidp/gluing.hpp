#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monoidp/factorizations.hpp"
#include "monoidp/lattice.hpp"
#include "monoidp/semigroups.hpp"

namespace monoidp {

// S = <A1 u A2> with G(<A1>) n G(<A2>) = dZ and d in <A1> n <A2>, d != 0.
// Index sets refer to the input order of the affine generators.
struct GluingDecomposition {
  std::vector<std::size_t> part1;
  std::vector<std::size_t> part2;
  Vec d;
  Factorization u;  // over part1, lexicographically largest
  Factorization v;  // over part2, lexicographically largest
  IntegerLattice intersection;
};

// What is known about one side of a gluing.
struct PartReport {
  bool uniquely_presented;
  std::vector<Vec> betti;
};

// Numerical semigroups enter gluing code as dimension-1 affine data.
AffineSemigroup as_affine(NumericalSemigroup const& s);

std::optional<GluingDecomposition> check_gluing(
    AffineSemigroup const& s,
    std::vector<std::size_t> const& part1);

constexpr std::size_t kMaxGluingGenerators = 14;

// Every unordered proper partition, generator 0 always in part1. Throws
// TooManyGenerators beyond kMaxGluingGenerators generators.
std::vector<GluingDecomposition> find_gluings(AffineSemigroup const& s);

// Betti(S) = Betti(S1) u Betti(S2) u {d}, sorted.
std::vector<Vec> betti_via_gluing(GluingDecomposition const& g,
                                  std::vector<Vec> const& betti1,
                                  std::vector<Vec> const& betti2);

// d has exactly two factorizations iff d - a is outside S for every Betti
// element a of either part.
bool d_has_unique_presentation(AffineSemigroup const& s,
                               GluingDecomposition const& g,
                               std::vector<Vec> const& betti1,
                               std::vector<Vec> const& betti2);
bool d_has_unique_presentation(NumericalSemigroup const& s,
                               GluingDecomposition const& g,
                               std::vector<Vec> const& betti1,
                               std::vector<Vec> const& betti2);

// Both parts uniquely presented and +-(d - a) outside S for every Betti
// element a of either part.
bool uniquely_presented_via_gluing(AffineSemigroup const& s,
                                   GluingDecomposition const& g,
                                   PartReport const& part1,
                                   PartReport const& part2);
bool uniquely_presented_via_gluing(NumericalSemigroup const& s,
                                   GluingDecomposition const& g,
                                   PartReport const& part1,
                                   PartReport const& part2);

struct NumericalGluing {
  NumericalSemigroup semigroup;
  // lambda * minimal_generators(S1) followed by mu, as dimension-1 atoms.
  AffineSemigroup atoms;
  GluingDecomposition decomposition;
};

// <lambda * S1, mu> glued at d = lambda * mu. Requires lambda >= 2,
// gcd(lambda, mu) = 1 and mu in S1 but not a minimal generator of S1;
// throws InvalidGluing otherwise or if the decomposition does not verify.
NumericalGluing glue_numerical(NumericalSemigroup const& s1,
                               Int lambda,
                               Int mu);

}  // namespace monoidp
