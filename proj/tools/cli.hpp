#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monoidp/arith.hpp"
#include "monoidp/presentations.hpp"

namespace monoidp::cli {

// Exit codes.
inline constexpr int kOk           = 0;
inline constexpr int kInternal     = 1;
inline constexpr int kInvalidInput = 2;

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

// "4,6,21"
std::vector<Int> parse_numerical(std::string const& text);

// "2 0;0 3;2 1;1 2"
std::vector<Vec> parse_affine(std::string const& text);

// "(5,0,0)"
std::string format_tuple(std::vector<Int> const& v);

// One pair per line: "(3,0) (0,2) @6 indispensable". The element and
// flag are informational; parse_pairs reads back the two tuples.
std::string format_pair(PresentationPair const& p);

// Accepts the plain-text minpres output or its --json envelope.
std::vector<PresentationPair> parse_pairs(std::string const& text);

}  // namespace monoidp::cli
