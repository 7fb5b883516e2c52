#include "monoidp/lattice.hpp"

#include <utility>

namespace monoidp {

namespace {

using Matrix = std::vector<Vec>;

void combine_rows(Vec& x, Vec& y, Int a, Int b, Int c, Int d) {
  // (x, y) <- (a x + b y, c x + d y)
  for (std::size_t j = 0; j < x.size(); ++j) {
    Int nx = checked_add(checked_mul(a, x[j]), checked_mul(b, y[j]));
    Int ny = checked_add(checked_mul(c, x[j]), checked_mul(d, y[j]));
    x[j]   = nx;
    y[j]   = ny;
  }
}

void subtract_multiple(Vec& x, Vec const& y, Int f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = checked_sub(x[j], checked_mul(f, y[j]));
  }
}

// Brings the first `columns` columns of m into Hermite normal form using
// unimodular row operations only, and returns the rank of that block. Rows
// at index >= rank end up zero on those columns.
std::size_t echelon(Matrix& m, std::size_t columns) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      Int b = m[i][col];
      if (b == 0) continue;
      Int a = m[row][col];
      if (a == 0) {
        std::swap(m[row], m[i]);
        continue;
      }
      auto [g, p, q] = extended_gcd(a, b);
      // [[p, q], [-b/g, a/g]] has determinant 1
      combine_rows(m[row], m[i], p, q, checked_neg(b / g), a / g);
    }
    Int pivot = m[row][col];
    if (pivot == 0) continue;
    if (pivot < 0) {
      for (Int& x : m[row]) x = checked_neg(x);
      pivot = -pivot;
    }
    for (std::size_t k = 0; k < row; ++k) {
      subtract_multiple(m[k], m[row], floor_div(m[k][col], pivot));
    }
    ++row;
  }
  return row;
}

}  // namespace

IntegerLattice hnf(std::vector<Vec> const& rows, std::size_t dimension) {
  Matrix m;
  for (Vec const& r : rows) {
    if (r.size() != dimension) {
      throw Error(ErrorCode::DimensionMismatch, "row has wrong dimension");
    }
    if (!is_zero(r)) m.push_back(r);
  }
  std::size_t const rank = echelon(m, dimension);
  m.resize(rank);
  IntegerLattice out(dimension);
  out._basis = std::move(m);
  return out;
}

bool IntegerLattice::contains(Vec const& v) const {
  if (v.size() != _dimension) {
    throw Error(ErrorCode::DimensionMismatch, "vector has wrong dimension");
  }
  Vec rem = v;
  for (Vec const& row : _basis) {
    std::size_t col = 0;
    while (row[col] == 0) ++col;
    for (std::size_t j = 0; j < col; ++j) {
      if (rem[j] != 0) return false;
    }
    if (rem[col] % row[col] != 0) return false;
    subtract_multiple(rem, row, rem[col] / row[col]);
  }
  return is_zero(rem);
}

IntegerLattice lattice_intersection(IntegerLattice const& l1,
                                    IntegerLattice const& l2) {
  std::size_t const d = l1.dimension();
  if (l2.dimension() != d) {
    throw Error(ErrorCode::DimensionMismatch, "lattices differ in dimension");
  }
  std::size_t const k1 = l1.rank();
  std::size_t const k  = k1 + l2.rank();

  // Rows (b | e_i) for the stacked bases; the rows whose left block reduces
  // to zero carry the integer left kernel {(x, y) : x B1 + y B2 = 0}.
  Matrix m;
  m.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec const& b = i < k1 ? l1.basis()[i] : l2.basis()[i - k1];
    Vec row(d + k, 0);
    std::copy(b.begin(), b.end(), row.begin());
    row[d + i] = 1;
    m.push_back(std::move(row));
  }
  std::size_t const rank = echelon(m, d);

  std::vector<Vec> generators;
  for (std::size_t i = rank; i < k; ++i) {
    Vec x(d, 0);
    for (std::size_t j = 0; j < k1; ++j) {
      Int coeff = m[i][d + j];
      if (coeff == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        x[c] = checked_add(x[c], checked_mul(coeff, l1.basis()[j][c]));
      }
    }
    generators.push_back(std::move(x));
  }
  return hnf(generators, d);
}

}  // namespace monoidp
