#include "monoidp/arith.hpp"

namespace monoidp {

Vec add(Vec const& a, Vec const& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

Vec sub(Vec const& a, Vec const& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

Vec scale(Int lambda, Vec const& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_mul(lambda, v[i]);
  return out;
}

Int coordinate_sum(Vec const& v) {
  Int s = 0;
  for (Int x : v) s = checked_add(s, x);
  return s;
}

}  // namespace monoidp
