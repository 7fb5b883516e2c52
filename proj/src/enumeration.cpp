#include "monoidp/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "monoidp/presentations.hpp"

namespace monoidp {

namespace {

// S \ {g} for a minimal generator g > F(S).
TreeNode child(TreeNode const& node, Int g) {
  auto const& gens = node.semigroup.minimal_generators();
  std::vector<Int> candidates;
  if (gens.size() == 1) {
    // S = N: N \ {1} = <2, 3>
    candidates = {2, 3};
  } else {
    // generated by the other minimal generators together with g + A
    for (Int a : gens) {
      if (a != g) candidates.push_back(a);
      candidates.push_back(checked_add(g, a));
    }
  }
  TreeNode out = make_node(NumericalSemigroup(std::move(candidates)));
  if (out.semigroup.frobenius() != g) {
    throw std::logic_error("semigroup tree: child Frobenius number "
                           + std::to_string(out.semigroup.frobenius())
                           + " differs from removed generator "
                           + std::to_string(g));
  }
  return out;
}

// Nodes with Frobenius number in [1, f_max], grouped by Frobenius number.
std::vector<std::vector<NumericalSemigroup>> collect_up_to(Int f_max) {
  std::vector<std::vector<NumericalSemigroup>> out(
      static_cast<std::size_t>(std::max<Int>(f_max, 0)));
  std::vector<TreeNode> stack{make_node(NumericalSemigroup({1}))};
  while (!stack.empty()) {
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    Int const f = node.semigroup.frobenius();
    if (f >= 1) out[static_cast<std::size_t>(f - 1)].push_back(node.semigroup);
    if (f >= f_max) continue;
    for (Int g : node.removable) {
      // children with g > f_max have Frobenius number g > f_max
      if (g > f_max) break;
      stack.push_back(child(node, g));
    }
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

}  // namespace

TreeNode make_node(NumericalSemigroup s) {
  std::vector<Int> removable;
  for (Int g : s.minimal_generators()) {
    if (g > s.frobenius()) removable.push_back(g);
  }
  return TreeNode{std::move(s), std::move(removable)};
}

std::vector<TreeNode> children(TreeNode const& node) {
  std::vector<TreeNode> out;
  for (Int g : node.removable) out.push_back(child(node, g));
  return out;
}

std::vector<NumericalSemigroup> semigroups_with_frobenius(Int f) {
  if (f < 1) return {};
  return std::move(collect_up_to(f).back());
}

FrobeniusCounts count_by_frobenius(Int f_max, unsigned threads) {
  FrobeniusCounts out;
  if (f_max < 1) return out;
  auto const levels = collect_up_to(f_max);

  std::vector<NumericalSemigroup const*> all;
  std::vector<std::size_t> level_of;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (auto const& s : levels[i]) {
      all.push_back(&s);
      level_of.push_back(i);
    }
  }

  std::vector<char> unique(all.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < all.size(); k = next++) {
      unique[k] = is_uniquely_presented(*all[k]).answer ? 1 : 0;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  out.totals.assign(levels.size(), 0);
  out.uniquely_presented.assign(levels.size(), 0);
  for (std::size_t k = 0; k < all.size(); ++k) {
    ++out.totals[level_of[k]];
    out.uniquely_presented[level_of[k]] += static_cast<std::size_t>(unique[k]);
  }
  return out;
}

unsigned threads_from_environment() {
  char const* value = std::getenv("MONOIDP_THREADS");
  if (value == nullptr) return 0;
  char* end   = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed < 1 || parsed > 1024) return 0;
  return static_cast<unsigned>(parsed);
}

}  // namespace monoidp
