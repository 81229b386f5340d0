#include "frames/veronese.hpp"

#include <algorithm>

#include "frames/errors.hpp"

namespace frames {

Matrix squares_coefficients(const PrimeField& f, const Matrix& forms) {
  const std::size_t r = forms.cols();
  if (r < 1 || forms.rows() < 1) throw InvalidArgument("need at least one form and one variable");
  Matrix coeffs(forms.rows(), r * (r + 1) / 2);
  for (std::size_t j = 0; j < forms.rows(); ++j) {
    std::size_t col = 0;
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = a; b < r; ++b, ++col) {
        const Scalar prod = f.mul(forms.at(j, a), forms.at(j, b));
        coeffs.at(j, col) = a == b ? prod : f.add(prod, prod);
      }
    }
  }
  return coeffs;
}

Int squares_span_dimension(const PrimeField& f, const Matrix& forms) {
  return static_cast<Int>(rank(f, squares_coefficients(f, forms)));
}

Int expected_squares_dimension(Int r, Int n) {
  if (r < 1 || n < 1) throw InvalidArgument("r and n must be positive");
  return std::min(choose2(r + 1), n);
}

GenericIdentityTally check_generic_identity(const PrimeField& f, Int r, Int n, Int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be positive");
  const Int expected = expected_squares_dimension(r, n);
  Rng rng(seed);
  GenericIdentityTally tally;
  for (Int t = 0; t < trials; ++t) {
    const Matrix forms = random_matrix(f, rng, static_cast<std::size_t>(n), static_cast<std::size_t>(r));
    const Int dim = squares_span_dimension(f, forms);
    tally.max_observed = std::max(tally.max_observed, dim);
    if (dim == expected) ++tally.passes;
    ++tally.total;
  }
  return tally;
}

std::optional<Matrix> forms_after_coordinate_change(const PrimeField& f, const Matrix& b, Rng& rng) {
  const std::size_t q = b.rows();
  const std::size_t n = b.cols();
  if (q == 0 || q >= n) throw InvalidArgument("block must have 1 <= q < n rows");
  const Matrix m = vstack(b, random_matrix(f, rng, n - q, n));
  const auto inv = inverse(f, m);
  if (!inv) return std::nullopt;
  Matrix h(n, n - q);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = q; c < n; ++c) h.at(j, c - q) = inv->at(j, c);
  return h;
}

Int predicted_half_jacobian_rank(const PrimeField& f, const Matrix& b, const Matrix& h) {
  const auto q = static_cast<Int>(b.rows());
  const auto n = static_cast<Int>(b.cols());
  return squares_span_dimension(f, h) + q * n - choose2(q) - n;
}

}  // namespace frames
