#include "monoidp/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace monoidp {

namespace {

void validate(IntervalParams const& p) {
  if (p.a < 2 || p.x < 1 || p.x >= p.a) {
    throw Error(ErrorCode::InvalidParams,
                "interval needs a >= 2 and 1 <= x < a (a = "
                    + std::to_string(p.a) + ", x = " + std::to_string(p.x)
                    + ")");
  }
}

void validate(ED3SymmetricParams const& p) {
  bool ok = p.m1 > 1 && p.m2 > 1 && std::gcd(p.m1, p.m2) == 1 && p.a >= 2
            && p.b >= 0 && p.c >= 0 && p.b + p.c >= 2;
  if (ok) {
    Int third = checked_add(checked_mul(p.b, p.m1), checked_mul(p.c, p.m2));
    ok        = std::gcd(p.a, third) == 1;
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidParams,
                "need coprime m1, m2 > 1, a >= 2, b, c >= 0, b + c >= 2 and "
                "gcd(a, b m1 + c m2) = 1");
  }
}

void require_med(NumericalSemigroup const& s) {
  if (!is_med(s)) {
    throw Error(ErrorCode::NotMED,
                "multiplicity " + std::to_string(s.multiplicity())
                    + " differs from embedding dimension "
                    + std::to_string(s.embedding_dimension()));
  }
}

std::vector<Int> sorted_unique(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Factorization widen(Factorization const& u) {
  // new generator a_1 + a_2 sits at index 1
  Factorization w;
  w.exponents.reserve(u.size() + 1);
  w.exponents.push_back(u[0]);
  w.exponents.push_back(0);
  w.exponents.insert(w.exponents.end(), u.exponents.begin() + 1,
                     u.exponents.end());
  return w;
}

}  // namespace

NumericalSemigroup interval_semigroup(IntervalParams const& p) {
  validate(p);
  std::vector<Int> gens;
  for (Int k = 0; k <= p.x; ++k) gens.push_back(checked_add(p.a, k));
  return NumericalSemigroup(gens);
}

bool interval_uniquely_presented(IntervalParams const& p) {
  validate(p);
  if (p.x <= 2) return true;
  if (p.x == 3) return (p.a - 1) % 3 != 0;
  return false;
}

ClosedFormBetti interval_betti_closed_form(IntervalParams const& p) {
  validate(p);
  if (p.x != 2 && p.x != 3) {
    throw Error(ErrorCode::UnsupportedX,
                "closed form known for x = 2, 3 only, got x = "
                    + std::to_string(p.x));
  }
  Int const a = p.a, q = p.q(), r = p.r();
  // (q + 1)(a + x) is the largest Betti element; it and its predecessor
  // are the ones that depend on q.
  Int const top = checked_mul(q + 1, checked_add(a, p.x));
  ClosedFormBetti out{{2 * (a + 1)}, false};
  if (p.x == 2) {
    if (r == 0) out.elements.push_back(top - 1);
    out.elements.push_back(top);
  } else {
    if (r == 0) {
      out.elements.push_back(top);
      out.lower_bound_only = true;
    } else {
      out.elements.push_back(2 * a + 3);
      out.elements.push_back(2 * (a + 2));
      if (r == 1) out.elements.push_back(top - 1);
      out.elements.push_back(top);
    }
  }
  out.elements = sorted_unique(std::move(out.elements));
  return out;
}

NumericalSemigroup ed3_symmetric(ED3SymmetricParams const& p) {
  validate(p);
  std::vector<Int> gens{
      checked_mul(p.a, p.m1), checked_mul(p.a, p.m2),
      checked_add(checked_mul(p.b, p.m1), checked_mul(p.c, p.m2))};
  NumericalSemigroup s(gens);
  if (s.embedding_dimension() != 3) {
    throw Error(ErrorCode::NotEmbeddingDimension3,
                "generators collapse to embedding dimension "
                    + std::to_string(s.embedding_dimension()));
  }
  return s;
}

bool ed3_symmetric_uniquely_presented(ED3SymmetricParams const& p) {
  validate(p);
  return 0 < p.b && p.b < p.m2 && 0 < p.c && p.c < p.m1;
}

std::vector<Int> ed3_symmetric_betti(ED3SymmetricParams const& p) {
  validate(p);
  Int const third
      = checked_add(checked_mul(p.b, p.m1), checked_mul(p.c, p.m2));
  return sorted_unique({checked_mul(p.a, checked_mul(p.m1, p.m2)),
                        checked_mul(p.a, third)});
}

bool med_uniquely_presented(NumericalSemigroup const& s) {
  require_med(s);
  if (s.multiplicity() < 3) {
    throw Error(ErrorCode::NotInTheoremScope,
                "the MED criterion covers multiplicity >= 3");
  }
  return s.multiplicity() == 3;
}

std::vector<Int> med_betti_closed_form(NumericalSemigroup const& s) {
  require_med(s);
  if (s.embedding_dimension() < 3) {
    throw Error(ErrorCode::NotInTheoremScope,
                "the MED closed form covers embedding dimension >= 3");
  }
  auto const& g = s.minimal_generators();
  std::vector<Int> out;
  for (std::size_t i = 1; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      out.push_back(checked_add(g[i], g[j]));
    }
  }
  return sorted_unique(std::move(out));
}

TelescopicStep telescopic_sequence(int i) {
  if (i < 1) {
    throw Error(ErrorCode::InvalidParams, "telescopic index must be >= 1");
  }
  std::vector<Int> gens{2, 3};
  std::vector<Int> betti{6};
  std::vector<PresentationPair> pairs{
      {Factorization{{3, 0}}, Factorization{{0, 2}}, Vec{6}, true}};

  for (int step = 1; step < i; ++step) {
    Int const d = checked_mul(2, checked_add(gens[0], gens[1]));
    std::vector<Int> next{checked_mul(2, gens[0]), gens[0] + gens[1]};
    for (std::size_t k = 1; k < gens.size(); ++k) {
      next.push_back(checked_mul(2, gens[k]));
    }
    std::vector<Int> next_betti{d};
    for (std::size_t k = 1; k < gens.size(); ++k) {
      next_betti.push_back(checked_mul(4, gens[k]));
    }

    std::vector<PresentationPair> next_pairs;
    for (PresentationPair const& pair : pairs) {
      next_pairs.push_back({widen(pair.first), widen(pair.second),
                            scale(2, pair.element), true});
    }
    Factorization glued_side(std::vector<Int>(next.size(), 0));
    glued_side.exponents[0] = 1;
    glued_side.exponents[2] = 1;
    Factorization new_side(std::vector<Int>(next.size(), 0));
    new_side.exponents[1] = 2;
    next_pairs.push_back({glued_side, new_side, Vec{d}, true});

    gens  = std::move(next);
    betti = sorted_unique(std::move(next_betti));
    pairs = std::move(next_pairs);
  }

  NumericalSemigroup s(gens);
  std::sort(pairs.begin(), pairs.end(), [](auto const& x, auto const& y) {
    return x.element < y.element;
  });
  return TelescopicStep{std::move(s), std::move(betti),
                        Presentation{lift(gens), std::move(pairs)}};
}

}  // namespace monoidp
