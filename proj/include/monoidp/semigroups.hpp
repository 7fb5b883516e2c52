#pragma once

#include <cstddef>
#include <vector>

#include "monoidp/arith.hpp"

namespace monoidp {

struct Invariants {
  Int multiplicity;
  std::size_t embedding_dimension;
  Int frobenius;
  Int genus;

  bool operator==(Invariants const&) const = default;
};

// A co-finite submonoid of N, held by its unique minimal generating set.
// Membership is answered from the Apery set of the multiplicity, which is
// filled at construction; values are immutable afterwards.
class NumericalSemigroup {
 public:
  // Deduplicates, sorts and reduces `gens` to the minimal generating set.
  // Throws EmptyInput, ZeroGenerator, NegativeValue, NonCoprimeGenerators.
  explicit NumericalSemigroup(std::vector<Int> gens);

  [[nodiscard]] std::vector<Int> const& minimal_generators() const noexcept {
    return _gens;
  }
  [[nodiscard]] Int multiplicity() const noexcept { return _gens.front(); }
  [[nodiscard]] Int max_generator() const noexcept { return _gens.back(); }
  [[nodiscard]] std::size_t embedding_dimension() const noexcept {
    return _gens.size();
  }
  // -1 for N.
  [[nodiscard]] Int frobenius() const noexcept { return _frobenius; }
  [[nodiscard]] Int genus() const noexcept { return _genus; }

  [[nodiscard]] bool contains(Int n) const noexcept {
    if (n < 0) return false;
    auto m = static_cast<std::size_t>(_gens.front());
    return n >= _apery[static_cast<std::size_t>(n) % m];
  }

  // Apery set of the multiplicity.
  [[nodiscard]] std::vector<Int> const& apery() const noexcept {
    return _apery;
  }

  // Gaps in increasing order.
  [[nodiscard]] std::vector<Int> gaps() const;

  bool operator==(NumericalSemigroup const& other) const noexcept {
    return _gens == other._gens;
  }
  auto operator<=>(NumericalSemigroup const& other) const noexcept {
    return _gens <=> other._gens;
  }

 private:
  std::vector<Int> _gens;
  std::vector<Int> _apery;
  Int _frobenius;
  Int _genus;
};

NumericalSemigroup numerical_from_generators(std::vector<Int> const& gens);

bool contains(NumericalSemigroup const& s, Int n) noexcept;

// Entry i is the least element of s congruent to i mod m. Throws NotAMember.
std::vector<Int> apery_set(NumericalSemigroup const& s, Int m);

Invariants invariants(NumericalSemigroup const& s);

bool is_symmetric(NumericalSemigroup const& s);

bool is_med(NumericalSemigroup const& s);

// A finitely generated submonoid of N^d. Generators keep their input order,
// so index sets (as used for gluings) refer to that order.
class AffineSemigroup {
 public:
  // Throws EmptyInput, ZeroVectorGenerator, DuplicateGenerator,
  // DimensionMismatch, NegativeValue.
  AffineSemigroup(std::size_t dimension, std::vector<Vec> gens);

  [[nodiscard]] std::size_t dimension() const noexcept { return _dimension; }
  [[nodiscard]] std::vector<Vec> const& generators() const noexcept {
    return _gens;
  }
  [[nodiscard]] std::size_t size() const noexcept { return _gens.size(); }
  [[nodiscard]] bool minimal() const noexcept { return _minimal; }

  // The minimal generating set: the generators outside the span of the rest,
  // in input order.
  [[nodiscard]] std::vector<Vec> minimal_generators() const;

  // False for any vector with a negative coordinate.
  [[nodiscard]] bool contains(Vec const& v) const;

 private:
  std::size_t _dimension;
  std::vector<Vec> _gens;
  bool _minimal;
};

AffineSemigroup affine_from_generators(std::size_t dimension,
                                       std::vector<Vec> const& gens);

bool affine_contains(AffineSemigroup const& s, Vec const& v);

// Whether v is a nonnegative integer combination of `atoms`. The atoms need
// not be minimal or pairwise distinct, but must be nonzero vectors of N^d.
bool in_monoid(std::vector<Vec> const& atoms, Vec const& v);

}  // namespace monoidp
