#pragma once

#include <optional>
#include <vector>

#include "monoidp/error.hpp"
#include "monoidp/factorizations.hpp"

namespace testutil {

// The error code raised by f, or nullopt when it returns normally.
template <typename F>
std::optional<monoidp::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (monoidp::Error const& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<std::vector<monoidp::Int>> exponents(
    monoidp::FactorizationSet const& fs) {
  std::vector<std::vector<monoidp::Int>> out;
  for (auto const& u : fs.factorizations()) out.push_back(u.exponents);
  return out;
}

}  // namespace testutil
