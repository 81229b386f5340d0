#pragma once

// Explicit points of strata, the Jacobian of the Gram equations, smoothness
// certificates and the one-step degenerations between neighbouring strata.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "frames/field.hpp"
#include "frames/strata.hpp"

namespace frames {

/// Coordinate x_{i,j}: row i, column j of the frame matrix (0-based).
struct VariableRef {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const VariableRef&, const VariableRef&) = default;
};

/// Symbolic Jacobian of the C(n,2) equations <x_h, x_k> = 0, h < k.
/// Rows: pairs (h,k) in lexicographic order. Columns: variables x_{i,j},
/// column index i*n + j (x_11, x_12, ..., x_1n, x_21, ...).
struct JacobianPattern {
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> row_pairs;
  std::vector<std::optional<VariableRef>> entries;  // row-major

  [[nodiscard]] std::size_t rows() const noexcept { return row_pairs.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return d * n; }
  [[nodiscard]] const std::optional<VariableRef>& at(std::size_t r, std::size_t c) const {
    return entries[r * cols() + c];
  }
  [[nodiscard]] VariableRef column_variable(std::size_t c) const noexcept { return {c / n, c % n}; }
};

[[nodiscard]] JacobianPattern build_jacobian(const FrameSpaceParams& params);

/// Substitutes a d x n matrix into the pattern. Any shape is accepted,
/// including zero rows or columns.
[[nodiscard]] Matrix evaluate_jacobian(const PrimeField& f, const Matrix& a);
[[nodiscard]] Matrix evaluate_pattern(const PrimeField& f, const JacobianPattern& pattern, const Matrix& a);
[[nodiscard]] Int jacobian_rank(const PrimeField& f, const Matrix& a);

enum class SmoothnessCriterion {
  StratumBound,  // min(C(n,2), nd - sigma(p,q)), stratum on the boundary
  FullRank,      // C(n,2), valid at any point
};

[[nodiscard]] std::string_view to_string(SmoothnessCriterion c) noexcept;

struct JacobianCertificate {
  FrameSpaceParams params;
  Matrix point;
  StratumIndex stratum;
  Int jacobian_rank = 0;
  Int required_bound = 0;
  bool passed = false;
  SmoothnessCriterion criterion = SmoothnessCriterion::StratumBound;
};

/// min(C(n,2), nd - sigma(p,q)).
[[nodiscard]] Int smoothness_bound(const FrameSpaceParams& params, StratumIndex s);

/// Point of L_{p,q}: e_1..e_p, then e_{p+2k-1} + nu e_{p+2k}, then random
/// combinations of the isotropic columns. Throws DomainError off the domain.
[[nodiscard]] Matrix sample_stratum_point(const PrimeField& f, const FrameSpaceParams& params, StratumIndex s,
                                          std::uint64_t seed);

/// Requires A in the variety and its stratum on the boundary.
[[nodiscard]] JacobianCertificate certify_smooth(const PrimeField& f, const FrameSpaceParams& params,
                                                 const Matrix& a);

/// Rank of the Jacobian against C(n,2). Requires A in the variety.
[[nodiscard]] JacobianCertificate certify_full_rank(const PrimeField& f, const FrameSpaceParams& params,
                                                    const Matrix& a);

/// [B; nu B] with B a random q x n matrix, d = 2q. Returns the first passing
/// certificate among `trials` draws, or the last failing one.
[[nodiscard]] JacobianCertificate certify_smooth_p0_general(const PrimeField& f, const FrameSpaceParams& params,
                                                            Int q, std::uint64_t seed, int trials);

/// [[A, 0], [0, 1]].
[[nodiscard]] Matrix extend_witness(const Matrix& a);

/// [Id_n; nu Id_n; 0] of shape d x n, d >= 2n.
[[nodiscard]] Matrix isotropic_block_witness(const PrimeField& f, std::size_t d, std::size_t n);

/// [B; nu B] for a q x n block B.
[[nodiscard]] Matrix doubled_block(const PrimeField& f, const Matrix& b);

/// Smooth point of L_{p,q} for (p,q) on the boundary: a (0,q) base point in
/// (d-p, n-p), extended p times, anisotropic columns moved to the front.
[[nodiscard]] JacobianCertificate constructive_smooth_witness(const PrimeField& f, const FrameSpaceParams& params,
                                                              StratumIndex s, std::uint64_t seed, int trials);

struct PerturbationWitness {
  Matrix base;
  StratumIndex base_stratum;
  std::size_t direction_column = 0;
  Vector direction;
  Scalar epsilon = 1;
  Matrix perturbed;
  StratumIndex target;
};

/// base with epsilon * direction added to the direction column.
[[nodiscard]] Matrix perturbed_at(const PrimeField& f, const PerturbationWitness& w, Scalar epsilon);

/// An isotropic column lying in the span of the other isotropic columns.
[[nodiscard]] std::optional<std::size_t> dependent_isotropic_column(const PrimeField& f, const Matrix& a);

/// A in S_{p,q} degenerates from S_{p+1,q}: v -> v + eps w, w anisotropic and
/// orthogonal to every column.
[[nodiscard]] PerturbationWitness perturb_increase_p(const PrimeField& f, const FrameSpaceParams& params,
                                                     const Matrix& a, std::uint64_t seed, Scalar epsilon = 1,
                                                     int retries = 8);

/// A in S_{p,q} degenerates from S_{p,q+1}: v -> v + eps w, w isotropic,
/// orthogonal to every column and outside the isotropic span. Over F_P the
/// residual plane can be anisotropic, in which case SearchExhausted is thrown.
[[nodiscard]] PerturbationWitness perturb_increase_q(const PrimeField& f, const FrameSpaceParams& params,
                                                     const Matrix& a, std::uint64_t seed, Scalar epsilon = 1,
                                                     int retries = 8);

}  // namespace frames
