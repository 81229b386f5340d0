#include "frames/exact_int.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "frames/errors.hpp"

namespace frames {

namespace {
__extension__ using i128 = __int128;
}  // namespace

Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int choose2(Int n) {
  if (n < 0) throw InvalidArgument("choose2: negative argument");
  // One of n, n-1 is even; divide before multiplying.
  return n % 2 == 0 ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const i128 wide = static_cast<i128>(result) * (n - k + i) / i;
    if (wide > INT64_MAX) throw std::overflow_error("binomial: overflow");
    result = static_cast<Int>(wide);
  }
  return result;
}

Int isqrt(Int x) {
  if (x < 0) throw InvalidArgument("isqrt: negative argument");
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<i128>(r) * r > x) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

Int floor_div(Int num, Int den) {
  if (den <= 0) throw InvalidArgument("floor_div: non-positive denominator");
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

int compare_with_root_difference(Int x, Int a, Int b) {
  if (b < 0) throw InvalidArgument("compare_with_root_difference: negative radicand");
  // x - (a - sqrt(b)) = sqrt(b) - t with t = a - x.
  const Int t = checked_sub(a, x);
  if (t < 0) return 1;
  const i128 t2 = static_cast<i128>(t) * t;
  const i128 bb = b;
  if (bb > t2) return 1;
  if (bb == t2) return 0;
  return -1;
}

Int ceil_root_quotient(Int a, Int b, Int den) {
  if (den <= 0) throw InvalidArgument("ceil_root_quotient: non-positive denominator");
  const Int s = isqrt(b);
  // a - sqrt(b) lies in (a - s - 1, a - s].
  Int m = floor_div(checked_sub(checked_sub(a, s), 1), den);
  while (compare_with_root_difference(checked_mul(den, m), a, b) < 0) ++m;
  while (compare_with_root_difference(checked_mul(den, m - 1), a, b) >= 0) --m;
  return m;
}

Int floor_root_quotient(Int a, Int b, Int den) {
  if (den <= 0) throw InvalidArgument("floor_root_quotient: non-positive denominator");
  const Int s = isqrt(b);
  Int m = floor_div(checked_sub(a, s), den);
  while (compare_with_root_difference(checked_mul(den, m), a, b) > 0) --m;
  while (compare_with_root_difference(checked_mul(den, m + 1), a, b) <= 0) ++m;
  return m;
}

}  // namespace frames
