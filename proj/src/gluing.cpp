#include "monoidp/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace monoidp {

namespace {

std::vector<Vec> select(std::vector<Vec> const& gens,
                        std::vector<std::size_t> const& idx) {
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(gens[i]);
  return out;
}

std::vector<Vec> sorted_union(std::vector<Vec> a, std::vector<Vec> const& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

template <typename Contains>
bool d_condition(GluingDecomposition const& g,
                 std::vector<Vec> const& betti1,
                 std::vector<Vec> const& betti2,
                 bool both_signs,
                 Contains&& contains) {
  for (Vec const& a : sorted_union(betti1, betti2)) {
    Vec diff = sub(g.d, a);
    if (contains(diff)) return false;
    if (both_signs && contains(scale(-1, diff))) return false;
  }
  return true;
}

auto numerical_membership(NumericalSemigroup const& s) {
  return [&s](Vec const& v) { return v.size() == 1 && s.contains(v[0]); };
}

auto affine_membership(AffineSemigroup const& s) {
  return [&s](Vec const& v) { return s.contains(v); };
}

}  // namespace

AffineSemigroup as_affine(NumericalSemigroup const& s) {
  return AffineSemigroup(1, lift(s.minimal_generators()));
}

std::optional<GluingDecomposition> check_gluing(
    AffineSemigroup const& s,
    std::vector<std::size_t> const& part1) {
  std::size_t const r = s.size();
  std::vector<bool> in_part1(r, false);
  for (std::size_t i : part1) {
    if (i >= r || in_part1[i]) {
      throw Error(ErrorCode::InvalidParams,
                  "bad generator index " + std::to_string(i));
    }
    in_part1[i] = true;
  }
  if (part1.empty() || part1.size() == r) {
    throw Error(ErrorCode::InvalidParams,
                "part must be a proper nonempty subset of the generators");
  }

  GluingDecomposition g{{}, {}, {}, {}, {}, IntegerLattice(s.dimension())};
  for (std::size_t i = 0; i < r; ++i) {
    (in_part1[i] ? g.part1 : g.part2).push_back(i);
  }
  std::vector<Vec> const a1 = select(s.generators(), g.part1);
  std::vector<Vec> const a2 = select(s.generators(), g.part2);

  g.intersection = lattice_intersection(lattice_of(a1, s.dimension()),
                                        lattice_of(a2, s.dimension()));
  if (g.intersection.rank() != 1) return std::nullopt;

  // d must lie in N^d; take whichever sign of the generator does.
  Vec d = g.intersection.basis().front();
  if (!is_nonnegative(d)) {
    d = scale(-1, d);
    if (!is_nonnegative(d)) return std::nullopt;
  }

  FactorizationSet const f1 = enumerate_factorizations(a1, d);
  FactorizationSet const f2 = enumerate_factorizations(a2, d);
  if (f1.empty() || f2.empty()) return std::nullopt;

  g.d = std::move(d);
  g.u = f1[0];
  g.v = f2[0];
  return g;
}

std::vector<GluingDecomposition> find_gluings(AffineSemigroup const& s) {
  std::size_t const r = s.size();
  if (r > kMaxGluingGenerators) {
    throw Error(ErrorCode::TooManyGenerators,
                std::to_string(r) + " generators; at most "
                    + std::to_string(kMaxGluingGenerators) + " supported");
  }
  std::vector<GluingDecomposition> out;
  if (r < 2) return out;
  // bit i of mask puts generator i + 1 in part1; the all-ones mask would
  // leave part2 empty
  std::size_t const masks = (std::size_t{1} << (r - 1)) - 1;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::vector<std::size_t> part1{0};
    for (std::size_t i = 1; i < r; ++i) {
      if (mask & (std::size_t{1} << (i - 1))) part1.push_back(i);
    }
    if (auto g = check_gluing(s, part1)) out.push_back(std::move(*g));
  }
  return out;
}

std::vector<Vec> betti_via_gluing(GluingDecomposition const& g,
                                  std::vector<Vec> const& betti1,
                                  std::vector<Vec> const& betti2) {
  return sorted_union(sorted_union(betti1, betti2), {g.d});
}

bool d_has_unique_presentation(AffineSemigroup const& s,
                               GluingDecomposition const& g,
                               std::vector<Vec> const& betti1,
                               std::vector<Vec> const& betti2) {
  return d_condition(g, betti1, betti2, false, affine_membership(s));
}

bool d_has_unique_presentation(NumericalSemigroup const& s,
                               GluingDecomposition const& g,
                               std::vector<Vec> const& betti1,
                               std::vector<Vec> const& betti2) {
  return d_condition(g, betti1, betti2, false, numerical_membership(s));
}

bool uniquely_presented_via_gluing(AffineSemigroup const& s,
                                   GluingDecomposition const& g,
                                   PartReport const& part1,
                                   PartReport const& part2) {
  return part1.uniquely_presented && part2.uniquely_presented
         && d_condition(g, part1.betti, part2.betti, true,
                        affine_membership(s));
}

bool uniquely_presented_via_gluing(NumericalSemigroup const& s,
                                   GluingDecomposition const& g,
                                   PartReport const& part1,
                                   PartReport const& part2) {
  return part1.uniquely_presented && part2.uniquely_presented
         && d_condition(g, part1.betti, part2.betti, true,
                        numerical_membership(s));
}

NumericalGluing glue_numerical(NumericalSemigroup const& s1,
                               Int lambda,
                               Int mu) {
  auto const& gens = s1.minimal_generators();
  if (lambda < 2) {
    throw Error(ErrorCode::InvalidGluing, "lambda must be at least 2");
  }
  if (std::gcd(lambda, mu) != 1) {
    throw Error(ErrorCode::InvalidGluing, "gcd(lambda, mu) must be 1");
  }
  if (!s1.contains(mu) || mu == 0) {
    throw Error(ErrorCode::InvalidGluing,
                "mu = " + std::to_string(mu) + " is not a nonzero element");
  }
  if (std::binary_search(gens.begin(), gens.end(), mu)) {
    throw Error(ErrorCode::InvalidGluing,
                "mu = " + std::to_string(mu) + " is a minimal generator");
  }

  std::vector<Int> glued;
  for (Int a : gens) glued.push_back(checked_mul(lambda, a));
  glued.push_back(mu);
  AffineSemigroup atoms(1, lift(glued));

  std::vector<std::size_t> part1(gens.size());
  std::iota(part1.begin(), part1.end(), std::size_t{0});
  auto g = check_gluing(atoms, part1);
  if (!g || g->d != Vec{checked_mul(lambda, mu)}) {
    throw Error(ErrorCode::InvalidGluing, "decomposition does not verify");
  }
  NumericalSemigroup s(glued);
  if (s.embedding_dimension() != glued.size()) {
    throw Error(ErrorCode::InvalidGluing,
                "glued generators are not minimal");
  }
  return NumericalGluing{std::move(s), std::move(atoms), std::move(*g)};
}

}  // namespace monoidp
