#include "monoidp/factorizations.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace monoidp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : _parent(n) {
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  // Keeps the smaller root so that each root is its component's first index.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    _parent[y] = x;
    return true;
  }

 private:
  std::vector<std::size_t> _parent;
};

void enumerate_scalar(std::vector<Int> const& atoms,
                      std::size_t idx,
                      Int rem,
                      std::vector<Int>& current,
                      std::vector<Factorization>& out) {
  Int a = atoms[idx];
  if (idx + 1 == atoms.size()) {
    if (rem % a == 0) {
      current[idx] = rem / a;
      out.push_back(Factorization{current});
    }
    return;
  }
  for (Int k = rem / a; k >= 0; --k) {
    current[idx] = k;
    enumerate_scalar(atoms, idx + 1, rem - k * a, current, out);
  }
  current[idx] = 0;
}

void enumerate_vector(std::vector<Vec> const& atoms,
                      std::size_t idx,
                      Vec& rem,
                      std::vector<Int>& current,
                      std::vector<Factorization>& out) {
  if (idx == atoms.size()) {
    if (is_zero(rem)) out.push_back(Factorization{current});
    return;
  }
  Vec const& a = atoms[idx];
  Int bound    = std::numeric_limits<Int>::max();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > 0) bound = std::min(bound, rem[j] / a[j]);
  }
  for (std::size_t j = 0; j < a.size(); ++j) rem[j] -= bound * a[j];
  for (Int k = bound; k >= 0; --k) {
    current[idx] = k;
    enumerate_vector(atoms, idx + 1, rem, current, out);
    for (std::size_t j = 0; j < a.size(); ++j) rem[j] += a[j];
  }
  for (std::size_t j = 0; j < a.size(); ++j) rem[j] -= a[j];
  current[idx] = 0;
}

void validate_atoms(std::vector<Vec> const& atoms, std::size_t dimension) {
  if (atoms.empty()) throw Error(ErrorCode::EmptyInput, "no atoms");
  for (Vec const& a : atoms) {
    if (a.size() != dimension) {
      throw Error(ErrorCode::DimensionMismatch, "atom dimension mismatch");
    }
    if (!is_nonnegative(a)) {
      throw Error(ErrorCode::NegativeValue, "atom with a negative entry");
    }
    if (is_zero(a)) throw Error(ErrorCode::ZeroVectorGenerator, "zero atom");
  }
}

}  // namespace

Int dot(Factorization const& u, Factorization const& v) {
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    s = checked_add(s, checked_mul(u[i], v[i]));
  }
  return s;
}

Vec evaluate(std::vector<Vec> const& atoms, Factorization const& u) {
  Vec out(atoms.empty() ? 0 : atoms.front().size(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = checked_add(out[j], checked_mul(u[i], atoms[i][j]));
    }
  }
  return out;
}

std::vector<Vec> lift(std::vector<Int> const& atoms) {
  std::vector<Vec> out;
  out.reserve(atoms.size());
  for (Int a : atoms) out.push_back(Vec{a});
  return out;
}

FactorizationSet::FactorizationSet(std::vector<Vec> atoms,
                                   Vec element,
                                   std::vector<Factorization> factorizations)
    : _atoms(std::move(atoms)),
      _element(std::move(element)),
      _factorizations(std::move(factorizations)) {
  for (Factorization const& u : _factorizations) {
    if (u.size() != _atoms.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "factorization length differs from atom count");
    }
    if (!is_nonnegative(u.exponents)) {
      throw Error(ErrorCode::NegativeValue, "negative exponent");
    }
    if (evaluate(_atoms, u) != _element) {
      throw Error(ErrorCode::NotAMember,
                  "factorization does not evaluate to the element");
    }
  }
  std::sort(_factorizations.begin(), _factorizations.end(), std::greater<>());
  _factorizations.erase(
      std::unique(_factorizations.begin(), _factorizations.end()),
      _factorizations.end());
}

FactorizationSet enumerate_factorizations(std::vector<Int> const& atoms,
                                          Int target) {
  if (atoms.empty()) throw Error(ErrorCode::EmptyInput, "no atoms");
  for (Int a : atoms) {
    if (a <= 0) {
      throw Error(ErrorCode::ZeroGenerator,
                  "atom " + std::to_string(a) + " is not positive");
    }
  }
  std::vector<Factorization> out;
  if (target >= 0) {
    std::vector<Int> current(atoms.size(), 0);
    enumerate_scalar(atoms, 0, target, current, out);
  }
  return FactorizationSet(lift(atoms), Vec{target}, std::move(out));
}

FactorizationSet enumerate_factorizations(std::vector<Vec> const& atoms,
                                          Vec const& target) {
  validate_atoms(atoms, target.size());
  std::vector<Factorization> out;
  if (is_nonnegative(target)) {
    Vec rem = target;
    std::vector<Int> current(atoms.size(), 0);
    enumerate_vector(atoms, 0, rem, current, out);
  }
  return FactorizationSet(atoms, target, std::move(out));
}

FactorizationSet factorizations(NumericalSemigroup const& s, Int n) {
  return enumerate_factorizations(s.minimal_generators(), n);
}

FactorizationSet factorizations(AffineSemigroup const& s, Vec const& v) {
  return enumerate_factorizations(s.minimal_generators(), v);
}

std::size_t count_factorizations(std::vector<Int> const& atoms, Int target) {
  return enumerate_factorizations(atoms, target).size();
}

std::size_t count_factorizations(std::vector<Vec> const& atoms,
                                 Vec const& target) {
  return enumerate_factorizations(atoms, target).size();
}

RClassPartition r_classes(FactorizationSet const& fs) {
  std::size_t const n = fs.size();
  std::size_t const r = fs.atoms().size();
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Two exponent vectors of N^r have nonzero dot product iff their supports
  // meet, so joining every factorization to the first one using the same
  // atom yields the same components as the all-pairs pass.
  std::vector<std::size_t> first_with(r, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      if (fs[k][i] == 0) continue;
      if (first_with[i] == n) {
        first_with[i] = k;
      } else if (uf.unite(first_with[i], k)) {
        edges.emplace_back(first_with[i], k);
      }
    }
  }

  RClassPartition out;
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t root = uf.find(k);
    if (class_of[root] == n) {
      class_of[root] = out.classes.size();
      out.classes.emplace_back();
    }
    out.classes[class_of[root]].members.push_back(k);
  }
  for (auto const& e : edges) {
    out.classes[class_of[uf.find(e.first)]].tree.push_back(e);
  }
  return out;
}

}  // namespace monoidp
