#pragma once

#include <cstddef>
#include <vector>

#include "monoidp/semigroups.hpp"

namespace monoidp {

// A node of the semigroup tree rooted at N. Removing any minimal generator
// above the Frobenius number gives a child whose Frobenius number is that
// generator, so Frobenius numbers strictly increase along every edge.
struct TreeNode {
  NumericalSemigroup semigroup;
  // Minimal generators greater than the Frobenius number.
  std::vector<Int> removable;
};

TreeNode make_node(NumericalSemigroup s);

std::vector<TreeNode> children(TreeNode const& node);

// All numerical semigroups with Frobenius number f, sorted by minimal
// generators.
std::vector<NumericalSemigroup> semigroups_with_frobenius(Int f);

struct FrobeniusCounts {
  // Index i - 1 holds the count for Frobenius number i.
  std::vector<std::size_t> totals;
  std::vector<std::size_t> uniquely_presented;
};

// threads == 0 picks the hardware concurrency. The result does not depend
// on the thread count.
FrobeniusCounts count_by_frobenius(Int f_max, unsigned threads = 1);

// Reads MONOIDP_THREADS; 0 (implementation default) when unset or invalid.
unsigned threads_from_environment();

}  // namespace monoidp
