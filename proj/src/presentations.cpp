#include "monoidp/presentations.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace monoidp {

namespace {

// Betti scans walk every integer up to the bound; refuse windows that
// could not finish in reasonable time.
constexpr Int kMaxScan = Int{1} << 24;

void require_scannable(Int bound) {
  if (bound > kMaxScan) {
    throw Error(ErrorCode::ResourceLimit,
                "scan window " + std::to_string(bound) + " is too large");
  }
}

// An element whose fiber has one R-class needs at least two atoms a_i with
// s - a_i in S to be Betti; this rules out most candidates cheaply.
bool has_two_divisors(NumericalSemigroup const& s, Int n) {
  int count = 0;
  for (Int g : s.minimal_generators()) {
    if (g > n) break;
    if (s.contains(n - g) && ++count >= 2) return true;
  }
  return false;
}

template <typename Visit>
void for_each_betti_fiber(NumericalSemigroup const& s, Visit&& visit) {
  Int const bound = betti_search_bound(s);
  require_scannable(bound);
  for (Int n = 1; n <= bound; ++n) {
    if (!s.contains(n) || !has_two_divisors(s, n)) continue;
    FactorizationSet fs = factorizations(s, n);
    if (r_classes(fs).size() < 2) continue;
    if (!visit(fs)) return;
  }
}

std::vector<FactorizationSet> betti_fibers(NumericalSemigroup const& s) {
  std::vector<FactorizationSet> out;
  for_each_betti_fiber(s, [&](FactorizationSet const& fs) {
    out.push_back(fs);
    return true;
  });
  return out;
}

void append_pairs(FactorizationSet const& fs,
                  Topology topology,
                  std::vector<PresentationPair>& out) {
  RClassPartition const part = r_classes(fs);
  bool const indispensable   = fs.size() == 2;
  for (std::size_t k = 1; k < part.size(); ++k) {
    std::size_t const from = topology == Topology::Star ? 0 : k - 1;
    out.push_back(PresentationPair{fs[part.classes[from].members.front()],
                                   fs[part.classes[k].members.front()],
                                   fs.element(),
                                   indispensable});
  }
}

Presentation build_presentation(std::vector<Vec> atoms,
                                std::vector<FactorizationSet> const& fibers,
                                Topology topology) {
  Presentation pres{std::move(atoms), {}};
  for (FactorizationSet const& fs : fibers) {
    append_pairs(fs, topology, pres.pairs);
  }
  return pres;
}

UniquenessAnswer uniqueness_of(std::vector<FactorizationSet> const& fibers) {
  for (FactorizationSet const& fs : fibers) {
    if (fs.size() != 2) return {false, make_betti_report(fs)};
  }
  return {true, std::nullopt};
}

void require_member(NumericalSemigroup const& s, Int a) {
  if (!s.contains(a)) {
    throw Error(ErrorCode::NotAMember, std::to_string(a) + " is not in S");
  }
}

bool dominates(Factorization const& u, Factorization const& p) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < p[i]) return false;
  }
  return true;
}

Factorization rewrite(Factorization const& u,
                      Factorization const& from,
                      Factorization const& to) {
  Factorization w = u;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w.exponents[i] = checked_add(w[i] - from[i], to[i]);
  }
  return w;
}

// Whether the rewriting rules connect the whole fiber.
bool fiber_connected(FactorizationSet const& fs, Presentation const& pres) {
  std::set<Factorization> const members(fs.factorizations().begin(),
                                        fs.factorizations().end());
  std::set<Factorization> seen{fs[0]};
  std::deque<Factorization> queue{fs[0]};
  while (!queue.empty()) {
    Factorization u = std::move(queue.front());
    queue.pop_front();
    for (PresentationPair const& pair : pres.pairs) {
      for (int dir = 0; dir < 2; ++dir) {
        Factorization const& from = dir == 0 ? pair.first : pair.second;
        Factorization const& to   = dir == 0 ? pair.second : pair.first;
        if (!dominates(u, from)) continue;
        Factorization w = rewrite(u, from, to);
        if (members.contains(w) && seen.insert(w).second) {
          queue.push_back(std::move(w));
        }
      }
    }
  }
  return seen.size() == members.size();
}

std::vector<FactorizationSet> affine_betti_fibers(AffineSemigroup const& s,
                                                  Int degree_bound) {
  std::vector<Vec> const atoms = s.minimal_generators();
  std::vector<Vec> const elems = elements_up_to(s, degree_bound);
  std::set<Vec> const members(elems.begin(), elems.end());
  std::vector<FactorizationSet> out;
  for (Vec const& e : elems) {
    int divisors = 0;
    for (Vec const& a : atoms) {
      Vec rest = sub(e, a);
      if (is_nonnegative(rest) && members.contains(rest)) ++divisors;
    }
    if (divisors < 2) continue;
    FactorizationSet fs = enumerate_factorizations(atoms, e);
    if (r_classes(fs).size() >= 2) out.push_back(std::move(fs));
  }
  return out;
}

}  // namespace

BettiReport make_betti_report(FactorizationSet const& fs) {
  RClassPartition const part = r_classes(fs);
  bool all_singletons        = true;
  for (RClass const& c : part.classes) {
    if (c.members.size() != 1) all_singletons = false;
  }
  bool const betti = part.size() >= 2;
  return BettiReport{fs.element(),
                     fs.size(),
                     part.size(),
                     betti && all_singletons,
                     betti && fs.size() == 2};
}

Int betti_search_bound(NumericalSemigroup const& s) {
  return checked_add(s.frobenius(), checked_mul(2, s.max_generator()));
}

std::vector<Int> betti_elements(NumericalSemigroup const& s) {
  std::vector<Int> out;
  for_each_betti_fiber(s, [&](FactorizationSet const& fs) {
    out.push_back(fs.element().front());
    return true;
  });
  return out;
}

std::vector<BettiReport> betti_reports(NumericalSemigroup const& s) {
  std::vector<BettiReport> out;
  for_each_betti_fiber(s, [&](FactorizationSet const& fs) {
    out.push_back(make_betti_report(fs));
    return true;
  });
  return out;
}

std::vector<Int> betti_minimal_elements(NumericalSemigroup const& s) {
  std::vector<Int> const betti = betti_elements(s);
  std::vector<Int> out;
  for (Int b : betti) {
    bool minimal = std::none_of(betti.begin(), betti.end(), [&](Int other) {
      return other != b && s.contains(b - other);
    });
    if (minimal) out.push_back(b);
  }
  return out;
}

bool is_betti_minimal_by_classes(NumericalSemigroup const& s, Int a) {
  require_member(s, a);
  return make_betti_report(factorizations(s, a)).is_betti_minimal;
}

bool is_minimal_multi_element(NumericalSemigroup const& s, Int a) {
  require_member(s, a);
  RClassPartition const part = r_classes(factorizations(s, a));
  if (part.size() < 2) return false;
  return std::any_of(part.classes.begin(), part.classes.end(),
                     [](RClass const& c) { return c.members.size() == 1; });
}

Presentation minimal_presentation(NumericalSemigroup const& s,
                                  Topology topology) {
  return build_presentation(lift(s.minimal_generators()), betti_fibers(s),
                            topology);
}

UniquenessAnswer is_uniquely_presented(NumericalSemigroup const& s) {
  std::optional<BettiReport> witness;
  for_each_betti_fiber(s, [&](FactorizationSet const& fs) {
    if (fs.size() == 2) return true;
    witness = make_betti_report(fs);
    return false;
  });
  return {!witness.has_value(), witness};
}

bool element_has_unique_presentation(NumericalSemigroup const& s, Int a) {
  require_member(s, a);
  return make_betti_report(factorizations(s, a)).has_unique_presentation;
}

bool verify_presentation(NumericalSemigroup const& s,
                         Presentation const& pres,
                         Int bound) {
  Int const needed = betti_search_bound(s);
  if (bound < needed) {
    throw Error(ErrorCode::BoundTooSmall,
                "bound " + std::to_string(bound) + " is below "
                    + std::to_string(needed));
  }
  require_scannable(bound);
  std::size_t const e = s.embedding_dimension();
  for (PresentationPair const& pair : pres.pairs) {
    if (pair.first.size() != e || pair.second.size() != e) {
      throw Error(ErrorCode::DimensionMismatch,
                  "presentation pair has the wrong number of exponents");
    }
  }
  for (Int n = 1; n <= bound; ++n) {
    if (!s.contains(n) || !has_two_divisors(s, n)) continue;
    FactorizationSet fs = factorizations(s, n);
    if (fs.size() >= 2 && !fiber_connected(fs, pres)) return false;
  }
  return true;
}

bool is_complete_intersection_cardinality(NumericalSemigroup const& s) {
  return minimal_presentation(s).size() + 1 == s.embedding_dimension();
}

std::vector<Vec> elements_up_to(AffineSemigroup const& s, Int degree_bound) {
  std::set<Vec> seen;
  if (degree_bound < 0) return {};
  Vec const zero(s.dimension(), 0);
  seen.insert(zero);
  std::deque<Vec> queue{zero};
  while (!queue.empty()) {
    Vec e = std::move(queue.front());
    queue.pop_front();
    for (Vec const& g : s.generators()) {
      Vec next = add(e, g);
      if (coordinate_sum(next) > degree_bound) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

BoundedBetti affine_betti_up_to(AffineSemigroup const& s,
                                Int degree_bound,
                                bool bound_is_sufficient) {
  BoundedBetti out{{}, !bound_is_sufficient};
  for (FactorizationSet const& fs : affine_betti_fibers(s, degree_bound)) {
    out.elements.push_back(fs.element());
  }
  return out;
}

BoundedPresentation affine_minimal_presentation(AffineSemigroup const& s,
                                                Int degree_bound,
                                                Topology topology,
                                                bool bound_is_sufficient) {
  return {build_presentation(s.minimal_generators(),
                             affine_betti_fibers(s, degree_bound), topology),
          !bound_is_sufficient};
}

BoundedUniqueness affine_is_uniquely_presented(AffineSemigroup const& s,
                                               Int degree_bound,
                                               bool bound_is_sufficient) {
  return {uniqueness_of(affine_betti_fibers(s, degree_bound)),
          !bound_is_sufficient};
}

}  // namespace monoidp
