#pragma once

// Prime field F_P with P = 1 mod 4, dense matrices over it, and the
// anisotropic/isotropic rank invariants of a frame under the standard form
// <v, w> = v_1 w_1 + ... + v_d w_d.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "frames/exact_int.hpp"
#include "frames/strata.hpp"

namespace frames {

using Scalar = std::uint64_t;  // canonical residue in [0, P)

inline constexpr std::uint64_t kDefaultPrime = 998244353;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
[[nodiscard]] bool is_prime(std::uint64_t x) noexcept;

class PrimeField {
 public:
  /// Throws InvalidArgument unless P is prime, P = 1 mod 4 and P < 2^63.
  explicit PrimeField(std::uint64_t modulus = kDefaultPrime);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
  /// The smaller of the two square roots of -1.
  [[nodiscard]] Scalar nu() const noexcept { return nu_; }

  [[nodiscard]] Scalar add(Scalar a, Scalar b) const noexcept;
  [[nodiscard]] Scalar sub(Scalar a, Scalar b) const noexcept;
  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const noexcept;
  [[nodiscard]] Scalar neg(Scalar a) const noexcept;
  [[nodiscard]] Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Throws DomainError on zero.
  [[nodiscard]] Scalar inv(Scalar a) const;
  [[nodiscard]] Scalar from_int(Int v) const noexcept;
  /// Representative in (-P/2, P/2].
  [[nodiscard]] Int to_signed(Scalar a) const noexcept;
  [[nodiscard]] bool is_square(Scalar a) const noexcept;
  /// Some s with s^2 = a (Tonelli-Shanks), or nullopt for non-squares.
  [[nodiscard]] std::optional<Scalar> sqrt(Scalar a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  Scalar nu_;
};

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  [[nodiscard]] static Matrix identity(std::size_t k);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] Scalar at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

[[nodiscard]] Scalar bilinear(const PrimeField& f, const Vector& v, const Vector& w);
/// A^T A.
[[nodiscard]] Matrix gram(const PrimeField& f, const Matrix& a);
[[nodiscard]] Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix scale(const PrimeField& f, const Matrix& a, Scalar s);
[[nodiscard]] std::size_t rank(const PrimeField& f, Matrix m);
/// Columns form a basis of {x : M x = 0}.
[[nodiscard]] Matrix nullspace(const PrimeField& f, const Matrix& m);
[[nodiscard]] std::optional<Matrix> inverse(const PrimeField& f, const Matrix& m);
/// Columns of a selected in order.
[[nodiscard]] Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols);
[[nodiscard]] Matrix hstack(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix vstack(const Matrix& a, const Matrix& b);

struct FrameInvariants {
  bool in_variety = false;
  Int rank = 0;
  Int rk_ani = 0;
  Int rk_iso = 0;
  std::vector<std::size_t> anisotropic_columns;  // 0-based, increasing

  [[nodiscard]] StratumIndex stratum() const noexcept { return {rk_ani, rk_iso}; }
};

/// Outside the variety (Gram matrix not diagonal) only rank is filled in.
[[nodiscard]] FrameInvariants frame_invariants(const PrimeField& f, const Matrix& a);

/// Seeded source of uniform residues. Output depends only on the seed, never
/// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  [[nodiscard]] std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, bound), bound >= 1.
  [[nodiscard]] std::uint64_t below(std::uint64_t bound);
  [[nodiscard]] Scalar uniform(const PrimeField& f) { return below(f.modulus()); }
  [[nodiscard]] Scalar nonzero(const PrimeField& f) { return 1 + below(f.modulus() - 1); }

 private:
  std::mt19937_64 engine_;
};

[[nodiscard]] Vector random_vector(const PrimeField& f, Rng& rng, std::size_t len);
[[nodiscard]] Matrix random_matrix(const PrimeField& f, Rng& rng, std::size_t rows, std::size_t cols);
/// Product of d random reflections I - 2 v v^T / <v, v>; Q^T Q = I.
[[nodiscard]] Matrix random_isometry(const PrimeField& f, Rng& rng, std::size_t d);

}  // namespace frames
