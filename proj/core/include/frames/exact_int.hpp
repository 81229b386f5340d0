#pragma once

// Overflow-checked 64-bit integer helpers and exact comparisons against
// quantities of the form a - sqrt(b). Every threshold in the library is
// decided here by squaring, never through floating point.

#include <cstdint>

namespace frames {

using Int = std::int64_t;

// Throw std::overflow_error instead of wrapping.
[[nodiscard]] Int checked_add(Int a, Int b);
[[nodiscard]] Int checked_sub(Int a, Int b);
[[nodiscard]] Int checked_mul(Int a, Int b);

/// C(n, 2) = n(n-1)/2 for n >= 0.
[[nodiscard]] Int choose2(Int n);

/// C(n, k); 0 when k < 0 or k > n. Throws on overflow.
[[nodiscard]] Int binomial(Int n, Int k);

/// floor(sqrt(x)) for x >= 0.
[[nodiscard]] Int isqrt(Int x);

/// Floor division rounding toward negative infinity; den > 0.
[[nodiscard]] Int floor_div(Int num, Int den);

/// Sign of x - (a - sqrt(b)) for b >= 0: -1, 0 or +1.
[[nodiscard]] int compare_with_root_difference(Int x, Int a, Int b);

/// Least integer m with den*m >= a - sqrt(b), i.e. ceil((a - sqrt(b)) / den).
[[nodiscard]] Int ceil_root_quotient(Int a, Int b, Int den);

/// Greatest integer m with den*m <= a - sqrt(b), i.e. floor((a - sqrt(b)) / den).
[[nodiscard]] Int floor_root_quotient(Int a, Int b, Int den);

}  // namespace frames
