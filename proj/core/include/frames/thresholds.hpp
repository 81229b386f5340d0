#pragma once

// Closed-form degree thresholds for the ideal of orthogonal n-frames and the
// ring-theoretic classification they imply, including the graph ideals
// (Lovász–Saks–Schrijver ideals) that inherit the same bounds.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frames/exact_int.hpp"
#include "frames/strata.hpp"

namespace frames {

/// min(2 ceil((2n+1-sqrt(8n+1))/2), 2 ceil((2n-1-sqrt(8n-7))/2) + 1). n >= 2.
[[nodiscard]] Int d_ci(Int n);

/// min(2 floor((2n+1-sqrt(8n+1))/2) + 2, 2 floor((2n+1-sqrt(8n-7))/2) + 1). n >= 2.
[[nodiscard]] Int d_prime(Int n);

/// 3 for n = 2, 4 for n = 3, otherwise
/// min(2 ceil((2n+1-sqrt(8n-23))/2), 2 ceil((2n-1-sqrt(8n-31))/2) + 1).
[[nodiscard]] Int d_ufd(Int n);

struct ThresholdTriple {
  Int n = 0;
  Int d_ci = 0;
  Int d_prime = 0;
  Int d_ufd = 0;
};

[[nodiscard]] ThresholdTriple thresholds(Int n);

/// For every 2 <= d <= d_max, checks d >= d_ci(n) against the non-strict
/// parity comparison with 2n+1-sqrt(8n+1) / 2n-sqrt(8n-7), and
/// d >= d_prime(n) against the strict one.
[[nodiscard]] bool parity_threshold_equivalence_check(Int n, Int d_max);

enum class UfdStatus { Yes, NotImplied };
enum class Reducedness { Yes, GenericallyReducedOnly };

[[nodiscard]] std::string_view to_string(UfdStatus status) noexcept;
[[nodiscard]] std::string_view to_string(Reducedness status) noexcept;

struct PropertyReport {
  FrameSpaceParams params;
  bool complete_intersection = false;
  bool gorenstein = false;
  bool cohen_macaulay = false;
  bool equidimensional = false;
  bool domain = false;
  bool normal_domain = false;
  UfdStatus ufd = UfdStatus::NotImplied;
  Reducedness reduced = Reducedness::GenericallyReducedOnly;
  std::vector<std::string> justifications;
};

[[nodiscard]] PropertyReport classify_ring(const FrameSpaceParams& params);

struct MinimalDegrees {
  Int ci = 0;
  Int prime = 0;
  Int ufd = 0;
};

struct LssCertificate {
  Int vertex_count = 0;
  Int edge_count = 0;  // distinct undirected edges
  Int d = 0;
  bool radical_ci = false;
  bool normal_domain = false;
  bool ufd = false;
  MinimalDegrees minimal_d;
};

/// Sufficient conditions only; depend on vertex_count alone. Edges are
/// 1-indexed. Throws InvalidArgument on self-loops or out-of-range vertices.
[[nodiscard]] LssCertificate certify_lss(Int vertex_count, const std::vector<std::pair<Int, Int>>& edges,
                                         Int d);

}  // namespace frames
