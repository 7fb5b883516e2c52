#pragma once

#include <cstddef>
#include <vector>

#include "monoidp/arith.hpp"

namespace monoidp {

// A sublattice of Z^d stored by its row-style Hermite normal form basis:
// rows in echelon form, positive pivots, and every entry above a pivot
// reduced into [0, pivot).
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t dimension) : _dimension(dimension) {}

  [[nodiscard]] std::size_t dimension() const noexcept { return _dimension; }
  [[nodiscard]] std::size_t rank() const noexcept { return _basis.size(); }
  [[nodiscard]] std::vector<Vec> const& basis() const noexcept {
    return _basis;
  }

  [[nodiscard]] bool contains(Vec const& v) const;

  bool operator==(IntegerLattice const&) const = default;

 private:
  friend IntegerLattice hnf(std::vector<Vec> const& rows,
                            std::size_t dimension);

  std::size_t _dimension;
  std::vector<Vec> _basis;
};

// Zero rows are dropped. Throws DimensionMismatch or ArithmeticOverflow.
IntegerLattice hnf(std::vector<Vec> const& rows, std::size_t dimension);

// The group generated by `rows`.
inline IntegerLattice lattice_of(std::vector<Vec> const& rows,
                                 std::size_t dimension) {
  return hnf(rows, dimension);
}

IntegerLattice lattice_intersection(IntegerLattice const& l1,
                                    IntegerLattice const& l2);

}  // namespace monoidp
