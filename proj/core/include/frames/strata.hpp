#pragma once

// Integer combinatorics of the stratification of orthogonal n-frames in
// d-space: the lattice domain of admissible (anisotropic rank, isotropic
// rank) pairs, the stratum dimension polynomial, its upper boundary and
// maximizer, the known part of the degeneration order, and the resulting
// irreducible components.

#include <compare>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "frames/exact_int.hpp"

namespace frames {

/// Ambient dimension d >= 1 and frame length n >= 2.
class FrameSpaceParams {
 public:
  /// Throws InvalidArgument unless d >= 1 and n >= 2.
  FrameSpaceParams(Int d, Int n);

  [[nodiscard]] Int d() const noexcept { return d_; }
  [[nodiscard]] Int n() const noexcept { return n_; }

  friend bool operator==(const FrameSpaceParams&, const FrameSpaceParams&) = default;

 private:
  Int d_;
  Int n_;
};

/// Lattice point (p, q): p anisotropic columns, isotropic span of dimension q.
struct StratumIndex {
  Int p = 0;
  Int q = 0;

  friend auto operator<=>(const StratumIndex&, const StratumIndex&) = default;
};

/// p, q >= 0, p + q <= n, p + 2q <= d.
[[nodiscard]] bool in_domain(const FrameSpaceParams& params, StratumIndex s) noexcept;

/// Every integer point of the domain, sorted by (p, q). Never empty.
[[nodiscard]] std::vector<StratumIndex> enumerate_domain(const FrameSpaceParams& params);

/// The dimension polynomial pd + qd + qn - p^2/2 - 2pq - 3q^2/2 + p/2 - q/2,
/// evaluated at any integer pair without a domain check. The numerator
/// 2pd + 2qd + 2qn - p^2 - 4pq - 3q^2 + p - q is always even.
[[nodiscard]] Int sigma_formula(const FrameSpaceParams& params, Int p, Int q);

/// Dimension of every irreducible component of the stratum S_{p,q}.
/// Throws DomainError when s is not in the domain.
[[nodiscard]] Int sigma(const FrameSpaceParams& params, StratumIndex s);

/// nd - C(n,2): the value at (n, 0), the dimension of the principal component
/// when d >= n, and the Krull lower bound on every component's dimension.
[[nodiscard]] Int principal_value(const FrameSpaceParams& params);

enum class SegmentKind { Omega1, Omega2 };

struct BoundarySegment {
  SegmentKind kind = SegmentKind::Omega1;
  std::vector<StratumIndex> points;  // increasing q
};

/// Omega1 lies on p + q = n, Omega2 on p + 2q = d. Their disjoint union is
/// the set of componentwise-maximal points of the domain.
[[nodiscard]] std::pair<BoundarySegment, BoundarySegment> boundary(const FrameSpaceParams& params);

/// Omega1 followed by Omega2, increasing q.
[[nodiscard]] std::vector<StratumIndex> boundary_points(const FrameSpaceParams& params);

[[nodiscard]] bool on_boundary(const FrameSpaceParams& params, StratumIndex s) noexcept;

struct Endpoints {
  StratumIndex p1;  // (min(d, n), 0)
  StratumIndex p2;  // (d mod 2, floor(d / 2))
};

[[nodiscard]] Endpoints endpoints(const FrameSpaceParams& params);

struct SigmaMaximum {
  Int max_value = 0;
  std::vector<StratumIndex> argmax;  // sorted, subset of {P1, P2}
};

/// Maximum of sigma over the domain, evaluated at the two endpoints only.
[[nodiscard]] SigmaMaximum maximize_sigma(const FrameSpaceParams& params);

/// Same result by scanning every point of the domain. Debug/oracle path.
[[nodiscard]] SigmaMaximum maximize_sigma_exhaustive(const FrameSpaceParams& params);

/// Which endpoint(s) carry the maximum, decided without evaluating sigma:
/// compare d with 2n + 1 - sqrt(8n + 1) (d even) or 2n - sqrt(8n - 7) (d odd).
enum class MaximumCase { OnlyP1, BothEndpoints, OnlyP2 };

[[nodiscard]] MaximumCase maximum_case(const FrameSpaceParams& params);

/// Sign of d minus its parity bound (2n + 1 - sqrt(8n + 1) for even d,
/// 2n - sqrt(8n - 7) for odd d). Exact.
[[nodiscard]] int compare_to_parity_bound(Int d, Int n);

/// True when d equals its parity bound exactly.
[[nodiscard]] bool is_endpoint_tie(const FrameSpaceParams& params);

enum class PosetRelation { Below, NotBelow, Unknown };

enum class PosetReason {
  Reflexive,
  Componentwise,         // chain of single steps in p or q
  DichotomyToPrincipal,  // non-maximal boundary point under (n, 0)
  SigmaNotIncreasing,
  AnisotropicRankDrops,
  RankDrops,
  DistinctMaximal,
  Undecided,
};

[[nodiscard]] std::string_view to_string(PosetRelation relation) noexcept;
[[nodiscard]] std::string_view to_string(PosetReason reason) noexcept;

struct PosetVerdict {
  StratumIndex lower;
  StratumIndex upper;
  PosetRelation relation = PosetRelation::Unknown;
  PosetReason reason = PosetReason::Undecided;
};

/// Decides whether S_lower lies in the closure of S_upper using only the
/// sufficient and necessary conditions that are known. Unknown is a real
/// answer: the degeneration order is not fully determined.
[[nodiscard]] PosetVerdict poset_compare(const FrameSpaceParams& params, StratumIndex lower,
                                         StratumIndex upper);

/// Boundary points with sigma >= nd - C(n,2): the strata whose component
/// closures are the irreducible components of the variety. Increasing q.
[[nodiscard]] std::vector<StratumIndex> maximal_strata(const FrameSpaceParams& params);

/// Number of connected (= irreducible) components of S_{p,q}:
/// C(n,p) when p + 2q < d or p = d, and 2 C(n,p) when p + 2q = d and q > 0.
[[nodiscard]] Int component_count(const FrameSpaceParams& params, StratumIndex s);

struct ComponentRecord {
  StratumIndex stratum;
  Int dimension = 0;
  Int count = 0;
};

struct ComponentReport {
  FrameSpaceParams params;
  std::vector<ComponentRecord> components;
  Int total_count = 0;
  Int variety_dimension = 0;
  bool is_irreducible = false;
  std::optional<Int> principal_dimension;  // present iff d >= n
};

[[nodiscard]] ComponentReport component_report(const FrameSpaceParams& params);

}  // namespace frames
