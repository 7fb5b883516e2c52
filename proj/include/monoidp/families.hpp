#pragma once

#include <vector>

#include "monoidp/presentations.hpp"
#include "monoidp/semigroups.hpp"

namespace monoidp {

// <a, a+1, ..., a+x> with 1 <= x < a, and a - 1 = x q + r, 0 <= r < x.
struct IntervalParams {
  Int a;
  Int x;

  [[nodiscard]] Int q() const { return (a - 1) / x; }
  [[nodiscard]] Int r() const { return (a - 1) % x; }
};

NumericalSemigroup interval_semigroup(IntervalParams const& p);

bool interval_uniquely_presented(IntervalParams const& p);

struct ClosedFormBetti {
  std::vector<Int> elements;
  // Only some of the Betti elements are known (x = 3, r = 0).
  bool lower_bound_only;
};

// Defined for x in {2, 3}; throws UnsupportedX otherwise.
ClosedFormBetti interval_betti_closed_form(IntervalParams const& p);

// <a m1, a m2, b m1 + c m2>: m1, m2 > 1 coprime, a >= 2, b, c >= 0,
// b + c >= 2, gcd(a, b m1 + c m2) = 1.
struct ED3SymmetricParams {
  Int m1;
  Int m2;
  Int a;
  Int b;
  Int c;
};

// Throws InvalidParams, or NotEmbeddingDimension3 when the parameters
// collapse the generating set.
NumericalSemigroup ed3_symmetric(ED3SymmetricParams const& p);

bool ed3_symmetric_uniquely_presented(ED3SymmetricParams const& p);

// {a m1 m2, a (b m1 + c m2)}, sorted.
std::vector<Int> ed3_symmetric_betti(ED3SymmetricParams const& p);

// Throws NotMED, or NotInTheoremScope for multiplicity < 3.
bool med_uniquely_presented(NumericalSemigroup const& s);

// {a_i + a_j : 2 <= i <= j <= r}. Throws NotMED, or NotInTheoremScope for
// embedding dimension < 3.
std::vector<Int> med_betti_closed_form(NumericalSemigroup const& s);

struct TelescopicStep {
  NumericalSemigroup semigroup;
  // {2a_1 + 2a_2, 4a_2, ..., 4a_{i+1}} over the generators of S_i
  std::vector<Int> predicted_betti;
  // Built by gluing recursion: the pairs of the previous step reindexed,
  // plus (e_1 + e_3, 2 e_2) at the new gluing element.
  Presentation predicted_presentation;
};

// S_1 = <2, 3>; S_{i+1} = <2a_1, a_1 + a_2, 2a_2, ..., 2a_{i+1}>.
TelescopicStep telescopic_sequence(int i);

}  // namespace monoidp
