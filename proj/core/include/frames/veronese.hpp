#pragma once

// Dimension of the span of squares of linear forms inside the space of
// quadrics, and its link to the half Jacobian of a doubled block [B; nu B].

#include <cstdint>
#include <optional>

#include "frames/field.hpp"

namespace frames {

/// forms: n x r, row j holds the coefficients of h_j in Y_1..Y_r. Returns
/// dim span(h_1^2, ..., h_n^2) in the C(r+1,2) quadric monomials.
[[nodiscard]] Int squares_span_dimension(const PrimeField& f, const Matrix& forms);

/// n x C(r+1,2) coefficient matrix of the squares in the basis Y_a Y_b, a <= b
/// (lexicographic).
[[nodiscard]] Matrix squares_coefficients(const PrimeField& f, const Matrix& forms);

/// min(C(r+1,2), n).
[[nodiscard]] Int expected_squares_dimension(Int r, Int n);

struct GenericIdentityTally {
  Int passes = 0;
  Int total = 0;
  Int max_observed = 0;
};

/// Random n x r form matrices; counts draws reaching the expected dimension.
[[nodiscard]] GenericIdentityTally check_generic_identity(const PrimeField& f, Int r, Int n, Int trials,
                                                          std::uint64_t seed);

/// For a q x n block B of full row rank (q < n): completes B to an invertible
/// n x n matrix M with random rows and returns the n x (n-q) matrix whose row j
/// is row j of M^{-1} restricted to columns q..n-1. nullopt when the random
/// completion is singular.
[[nodiscard]] std::optional<Matrix> forms_after_coordinate_change(const PrimeField& f, const Matrix& b, Rng& rng);

/// rank of the half Jacobian of B predicted from the squares of the
/// transformed forms h: dim span(h_j^2) + qn - C(q,2) - n.
[[nodiscard]] Int predicted_half_jacobian_rank(const PrimeField& f, const Matrix& b, const Matrix& h);

}  // namespace frames
