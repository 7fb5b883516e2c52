#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monoidp/factorizations.hpp"
#include "monoidp/semigroups.hpp"

namespace monoidp {

// How the k R-class representatives of a Betti element are joined by k-1
// pairs: all to the first one, or consecutively.
enum class Topology { Star, Path };

struct BettiReport {
  Vec element;
  std::size_t factorization_count;
  std::size_t r_class_count;
  bool is_betti_minimal;
  bool has_unique_presentation;

  bool operator==(BettiReport const&) const = default;
};

BettiReport make_betti_report(FactorizationSet const& fs);

// A pair of factorizations of the same element; `first` is the
// lexicographically larger one.
struct PresentationPair {
  Factorization first;
  Factorization second;
  Vec element;
  bool indispensable;

  bool operator==(PresentationPair const&) const = default;
};

struct Presentation {
  std::vector<Vec> atoms;
  std::vector<PresentationPair> pairs;

  [[nodiscard]] std::size_t size() const noexcept { return pairs.size(); }
};

struct UniquenessAnswer {
  bool answer;
  // Report of the smallest Betti element with more than two factorizations.
  std::optional<BettiReport> witness;
};

// Every Betti element b of a numerical semigroup satisfies
// b <= F + 2 * max_generator: if u, v lie in different R-classes with
// i in supp(u), j in supp(v), then b - a_i - a_j is a gap, otherwise a
// factorization w + e_i + e_j of b would meet both classes.
Int betti_search_bound(NumericalSemigroup const& s);

std::vector<Int> betti_elements(NumericalSemigroup const& s);

std::vector<BettiReport> betti_reports(NumericalSemigroup const& s);

std::vector<Int> betti_minimal_elements(NumericalSemigroup const& s);

bool is_betti_minimal_by_classes(NumericalSemigroup const& s, Int a);

bool is_minimal_multi_element(NumericalSemigroup const& s, Int a);

Presentation minimal_presentation(NumericalSemigroup const& s,
                                  Topology topology = Topology::Star);

UniquenessAnswer is_uniquely_presented(NumericalSemigroup const& s);

bool element_has_unique_presentation(NumericalSemigroup const& s, Int a);

// Checks that the pairs of `pres`, used as rewriting rules in both
// directions, connect every fiber of an element <= bound. Throws
// BoundTooSmall when bound < betti_search_bound(s).
bool verify_presentation(NumericalSemigroup const& s,
                         Presentation const& pres,
                         Int bound);

bool is_complete_intersection_cardinality(NumericalSemigroup const& s);

// Affine semigroups have no a priori Betti bound, so everything below is
// computed over the elements whose coordinate sum is <= degree_bound and
// flagged `truncated` unless the caller vouches for the bound.
struct BoundedBetti {
  std::vector<Vec> elements;
  bool truncated;
};

struct BoundedPresentation {
  Presentation presentation;
  bool truncated;
};

struct BoundedUniqueness {
  UniquenessAnswer uniqueness;
  bool truncated;
};

// Elements of s with coordinate sum <= degree_bound, sorted.
std::vector<Vec> elements_up_to(AffineSemigroup const& s, Int degree_bound);

BoundedBetti affine_betti_up_to(AffineSemigroup const& s,
                                Int degree_bound,
                                bool bound_is_sufficient = false);

BoundedPresentation affine_minimal_presentation(
    AffineSemigroup const& s,
    Int degree_bound,
    Topology topology        = Topology::Star,
    bool bound_is_sufficient = false);

BoundedUniqueness affine_is_uniquely_presented(
    AffineSemigroup const& s,
    Int degree_bound,
    bool bound_is_sufficient = false);

}  // namespace monoidp
