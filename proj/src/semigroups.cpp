#include "monoidp/semigroups.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace monoidp {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Residue tables are dense arrays indexed by residue; refuse moduli that
// would not fit in memory.
constexpr Int kMaxModulus = Int{1} << 26;

// Least element of <added generators> in each residue class mod m, grown one
// generator at a time by walking the cycles of r -> r + g (mod m) twice.
class ResidueTable {
 public:
  explicit ResidueTable(Int modulus) : _m(modulus) {
    if (modulus > kMaxModulus) {
      throw Error(ErrorCode::ResourceLimit,
                  "modulus " + std::to_string(modulus) + " is too large");
    }
    _least.assign(static_cast<std::size_t>(modulus), kUnreached);
    _least[0] = 0;
  }

  [[nodiscard]] bool contains(Int n) const {
    if (n < 0) return false;
    Int least = _least[static_cast<std::size_t>(n % _m)];
    return least != kUnreached && n >= least;
  }

  void add_generator(Int g) {
    Int step   = g % _m;
    Int cycles = std::gcd(_m, step);
    if (step == 0) return;
    Int length = _m / cycles;
    for (Int start = 0; start < cycles; ++start) {
      // minimum over the cycle through `start`
      Int best = kUnreached;
      Int r    = start;
      for (Int k = 0; k < length; ++k) {
        best = std::min(best, at(r));
        r    = (r + step) % _m;
      }
      if (best == kUnreached) continue;
      Int n = best;
      for (Int k = 0; k < length; ++k) {
        n        = checked_add(n, g);
        Int& cur = at(n % _m);
        n        = std::min(n, cur);
        cur      = n;
      }
    }
  }

  [[nodiscard]] std::vector<Int> const& least() const noexcept {
    return _least;
  }

 private:
  Int& at(Int r) { return _least[static_cast<std::size_t>(r)]; }

  Int _m;
  std::vector<Int> _least;
};

void validate_numerical_input(std::vector<Int> const& gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  for (Int g : gens) {
    if (g == 0) throw Error(ErrorCode::ZeroGenerator, "generator 0");
    if (g < 0) {
      throw Error(ErrorCode::NegativeValue,
                  "negative generator " + std::to_string(g));
    }
  }
  if (gcd_of(gens) != 1) {
    throw Error(ErrorCode::NonCoprimeGenerators,
                "gcd of generators is " + std::to_string(gcd_of(gens)));
  }
}

// Memoized depth-first search over atoms in order; `failed` caches
// (index, remainder) states already known to have no completion.
class MembershipSearch {
 public:
  explicit MembershipSearch(std::vector<Vec> const& atoms) : _atoms(atoms) {
    std::size_t d = atoms.empty() ? 0 : atoms.front().size();
    // _reach[i][j]: some atom at index >= i is positive in coordinate j
    _reach.assign(atoms.size() + 1, std::vector<bool>(d, false));
    for (std::size_t i = atoms.size(); i-- > 0;) {
      for (std::size_t j = 0; j < d; ++j) {
        _reach[i][j] = _reach[i + 1][j] || atoms[i][j] > 0;
      }
    }
  }

  bool run(Vec const& target) { return search(0, target); }

 private:
  bool search(std::size_t idx, Vec const& rem) {
    if (is_zero(rem)) return true;
    if (idx == _atoms.size()) return false;
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (rem[j] > 0 && !_reach[idx][j]) return false;
    }
    auto key = std::make_pair(idx, rem);
    if (_failed.contains(key)) return false;

    Vec const& a = _atoms[idx];
    Int bound    = std::numeric_limits<Int>::max();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] > 0) bound = std::min(bound, rem[j] / a[j]);
    }
    Vec next = rem;
    for (std::size_t j = 0; j < a.size(); ++j) next[j] -= bound * a[j];
    for (Int k = bound; k >= 0; --k) {
      if (search(idx + 1, next)) return true;
      for (std::size_t j = 0; j < a.size(); ++j) next[j] += a[j];
    }
    _failed.insert(std::move(key));
    return false;
  }

  std::vector<Vec> const& _atoms;
  std::vector<std::vector<bool>> _reach;
  std::set<std::pair<std::size_t, Vec>> _failed;
};

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens) {
  validate_numerical_input(gens);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // A generator is redundant iff it lies in the monoid of the smaller ones.
  ResidueTable table(gens.front());
  _gens.push_back(gens.front());
  for (Int g : gens) {
    if (g > gens.front() && !table.contains(g)) {
      _gens.push_back(g);
      table.add_generator(g);
    }
  }
  _apery = table.least();

  Int m       = _gens.front();
  Int largest = *std::max_element(_apery.begin(), _apery.end());
  _frobenius  = largest - m;
  _genus      = 0;
  for (std::size_t i = 0; i < _apery.size(); ++i) {
    _genus = checked_add(_genus, (_apery[i] - static_cast<Int>(i)) / m);
  }
}

std::vector<Int> NumericalSemigroup::gaps() const {
  if (_genus > kMaxModulus) {
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(_genus) + " gaps are too many to list");
  }
  std::vector<Int> out;
  for (Int n = 1; n <= _frobenius; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

NumericalSemigroup numerical_from_generators(std::vector<Int> const& gens) {
  return NumericalSemigroup(gens);
}

bool contains(NumericalSemigroup const& s, Int n) noexcept {
  return s.contains(n);
}

std::vector<Int> apery_set(NumericalSemigroup const& s, Int m) {
  if (m < 1 || !s.contains(m)) {
    throw Error(ErrorCode::NotAMember,
                std::to_string(m) + " is not a positive element");
  }
  ResidueTable table(m);
  for (Int g : s.minimal_generators()) table.add_generator(g);
  return table.least();
}

Invariants invariants(NumericalSemigroup const& s) {
  return {s.multiplicity(), s.embedding_dimension(), s.frobenius(), s.genus()};
}

// x -> f - x maps gaps into S when S is symmetric, so exactly half of
// 0..f are gaps.
bool is_symmetric(NumericalSemigroup const& s) {
  return 2 * s.genus() == s.frobenius() + 1;
}

bool is_med(NumericalSemigroup const& s) {
  return s.multiplicity() == static_cast<Int>(s.embedding_dimension());
}

bool in_monoid(std::vector<Vec> const& atoms, Vec const& v) {
  if (!is_nonnegative(v)) return false;
  if (is_zero(v)) return true;
  MembershipSearch search(atoms);
  return search.run(v);
}

AffineSemigroup::AffineSemigroup(std::size_t dimension, std::vector<Vec> gens)
    : _dimension(dimension), _gens(std::move(gens)), _minimal(true) {
  if (_gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  if (dimension == 0) {
    throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  }
  for (std::size_t i = 0; i < _gens.size(); ++i) {
    Vec const& g = _gens[i];
    if (g.size() != dimension) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + std::to_string(i) + " has "
                      + std::to_string(g.size()) + " coordinates, expected "
                      + std::to_string(dimension));
    }
    if (!is_nonnegative(g)) {
      throw Error(ErrorCode::NegativeValue,
                  "generator " + std::to_string(i) + " has a negative entry");
    }
    if (is_zero(g)) {
      throw Error(ErrorCode::ZeroVectorGenerator,
                  "generator " + std::to_string(i) + " is zero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (_gens[j] == g) {
        throw Error(ErrorCode::DuplicateGenerator,
                    "generators " + std::to_string(j) + " and "
                        + std::to_string(i) + " coincide");
      }
    }
  }
  _minimal = minimal_generators().size() == _gens.size();
}

std::vector<Vec> AffineSemigroup::minimal_generators() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < _gens.size(); ++i) {
    std::vector<Vec> others;
    others.reserve(_gens.size() - 1);
    for (std::size_t j = 0; j < _gens.size(); ++j) {
      if (j != i) others.push_back(_gens[j]);
    }
    if (!in_monoid(others, _gens[i])) out.push_back(_gens[i]);
  }
  return out;
}

bool AffineSemigroup::contains(Vec const& v) const {
  if (v.size() != _dimension) {
    throw Error(ErrorCode::DimensionMismatch, "vector has wrong dimension");
  }
  return in_monoid(_gens, v);
}

AffineSemigroup affine_from_generators(std::size_t dimension,
                                       std::vector<Vec> const& gens) {
  return AffineSemigroup(dimension, gens);
}

bool affine_contains(AffineSemigroup const& s, Vec const& v) {
  return s.contains(v);
}

}  // namespace monoidp
