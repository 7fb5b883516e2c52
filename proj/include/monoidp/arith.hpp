#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "monoidp/error.hpp"

namespace monoidp {

using Int = std::int64_t;
using Vec = std::vector<Int>;

[[noreturn]] inline void throw_overflow() {
  throw Error(ErrorCode::ArithmeticOverflow, "64-bit integer overflow");
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow();
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow();
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int gcd_of(std::vector<Int> const& xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

// Extended Euclid: returns g = gcd(a, b) >= 0 with g = p*a + q*b.
struct ExtendedGcd {
  Int g, p, q;
};

inline ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quotient = old_r / r;
    Int tmp      = checked_sub(old_r, checked_mul(quotient, r));
    old_r        = r;
    r            = tmp;
    tmp          = checked_sub(old_s, checked_mul(quotient, s));
    old_s        = s;
    s            = tmp;
    tmp          = checked_sub(old_t, checked_mul(quotient, t));
    old_t        = t;
    t            = tmp;
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline bool is_nonnegative(Vec const& v) {
  for (Int x : v)
    if (x < 0) return false;
  return true;
}

inline bool is_zero(Vec const& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

Vec add(Vec const& a, Vec const& b);
Vec sub(Vec const& a, Vec const& b);
Vec scale(Int lambda, Vec const& v);
Int coordinate_sum(Vec const& v);

}  // namespace monoidp
