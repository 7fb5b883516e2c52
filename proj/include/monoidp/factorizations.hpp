#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "monoidp/arith.hpp"
#include "monoidp/semigroups.hpp"

namespace monoidp {

// An exponent vector u over an ordered list of atoms.
struct Factorization {
  std::vector<Int> exponents;

  auto operator<=>(Factorization const&) const = default;
  bool operator==(Factorization const&) const  = default;

  [[nodiscard]] std::size_t size() const noexcept { return exponents.size(); }
  [[nodiscard]] Int operator[](std::size_t i) const { return exponents[i]; }
};

Int dot(Factorization const& u, Factorization const& v);

// phi_A(u) = sum u_i a_i.
Vec evaluate(std::vector<Vec> const& atoms, Factorization const& u);

// The complete fiber of `element`, sorted lexicographically descending.
class FactorizationSet {
 public:
  // Validates every factorization against atoms and element, sorts and
  // removes duplicates.
  FactorizationSet(std::vector<Vec> atoms,
                   Vec element,
                   std::vector<Factorization> factorizations);

  [[nodiscard]] std::vector<Vec> const& atoms() const noexcept {
    return _atoms;
  }
  [[nodiscard]] Vec const& element() const noexcept { return _element; }
  [[nodiscard]] std::vector<Factorization> const& factorizations() const noexcept {
    return _factorizations;
  }
  [[nodiscard]] std::size_t size() const noexcept {
    return _factorizations.size();
  }
  [[nodiscard]] bool empty() const noexcept { return _factorizations.empty(); }
  [[nodiscard]] Factorization const& operator[](std::size_t i) const {
    return _factorizations[i];
  }

 private:
  std::vector<Vec> _atoms;
  Vec _element;
  std::vector<Factorization> _factorizations;
};

// One connected component of the fiber under "dot product nonzero".
struct RClass {
  // Indices into the FactorizationSet, ascending (so members[0] is the
  // lexicographically largest member).
  std::vector<std::size_t> members;
  // Spanning tree of the class: pairs of member indices with nonzero dot
  // product.
  std::vector<std::pair<std::size_t, std::size_t>> tree;
};

struct RClassPartition {
  // Ordered by lexicographically largest member, descending.
  std::vector<RClass> classes;

  [[nodiscard]] std::size_t size() const noexcept { return classes.size(); }
};

// Numerical atoms: positive integers. Atoms need not be coprime.
FactorizationSet enumerate_factorizations(std::vector<Int> const& atoms,
                                          Int target);
// Affine atoms: nonzero vectors of N^d.
FactorizationSet enumerate_factorizations(std::vector<Vec> const& atoms,
                                          Vec const& target);

FactorizationSet factorizations(NumericalSemigroup const& s, Int n);
FactorizationSet factorizations(AffineSemigroup const& s, Vec const& v);

std::size_t count_factorizations(std::vector<Int> const& atoms, Int target);
std::size_t count_factorizations(std::vector<Vec> const& atoms,
                                 Vec const& target);

RClassPartition r_classes(FactorizationSet const& fs);

std::vector<Vec> lift(std::vector<Int> const& atoms);

}  // namespace monoidp
