#include "frames/thresholds.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "frames/errors.hpp"

namespace frames {

namespace {

void require_n(Int n) {
  if (n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(n));
  if (n > 1'000'000) throw InvalidArgument("n above 10^6 is not supported");
}

}  // namespace

Int d_ci(Int n) {
  require_n(n);
  const Int even = 2 * ceil_root_quotient(2 * n + 1, 8 * n + 1, 2);
  const Int odd = 2 * ceil_root_quotient(2 * n - 1, 8 * n - 7, 2) + 1;
  return std::min(even, odd);
}

Int d_prime(Int n) {
  require_n(n);
  const Int even = 2 * floor_root_quotient(2 * n + 1, 8 * n + 1, 2) + 2;
  const Int odd = 2 * floor_root_quotient(2 * n + 1, 8 * n - 7, 2) + 1;
  return std::min(even, odd);
}

Int d_ufd(Int n) {
  require_n(n);
  if (n == 2) return 3;
  if (n == 3) return 4;
  const Int even = 2 * ceil_root_quotient(2 * n + 1, 8 * n - 23, 2);
  const Int odd = 2 * ceil_root_quotient(2 * n - 1, 8 * n - 31, 2) + 1;
  return std::min(even, odd);
}

ThresholdTriple thresholds(Int n) { return {n, d_ci(n), d_prime(n), d_ufd(n)}; }

bool parity_threshold_equivalence_check(Int n, Int d_max) {
  require_n(n);
  if (d_max < 2) throw InvalidArgument("d_max must be at least 2");
  const Int ci = d_ci(n);
  const Int prime = d_prime(n);
  for (Int d = 2; d <= d_max; ++d) {
    const int sign = compare_to_parity_bound(d, n);
    if ((d >= ci) != (sign >= 0)) return false;
    if ((d >= prime) != (sign > 0)) return false;
  }
  return true;
}

std::string_view to_string(UfdStatus status) noexcept {
  return status == UfdStatus::Yes ? "yes" : "not-implied";
}

std::string_view to_string(Reducedness status) noexcept {
  return status == Reducedness::Yes ? "yes" : "generically-reduced";
}

PropertyReport classify_ring(const FrameSpaceParams& params) {
  const Int d = params.d();
  const Int n = params.n();
  const auto t = thresholds(n);
  PropertyReport r{params, false, false, false, false, false, false, UfdStatus::NotImplied,
                   Reducedness::GenericallyReducedOnly, {}};

  if (d == 1) {
    r.complete_intersection = n <= 2;
    r.gorenstein = n <= 2;
    r.cohen_macaulay = true;
    r.equidimensional = true;
    r.reduced = Reducedness::Yes;
    r.justifications.push_back("d = 1: coordinate-hyperplane arrangement, radical and Cohen-Macaulay");
    r.justifications.push_back("d = 1: Gorenstein iff n <= 2");
  } else {
    const bool ci = d >= t.d_ci;
    r.complete_intersection = ci;
    r.gorenstein = ci;
    r.cohen_macaulay = ci;
    r.equidimensional = ci;
    r.justifications.push_back("complete-intersection threshold d >= " + std::to_string(t.d_ci) +
                               (ci ? " met" : " not met"));
    if (ci) {
      r.reduced = Reducedness::Yes;
      r.justifications.push_back("complete intersection and generically reduced, hence reduced");
    } else {
      r.justifications.push_back("generically reduced for all d, n");
    }
  }

  const bool prime = d >= t.d_prime;
  r.domain = prime;
  r.normal_domain = prime;
  r.justifications.push_back("prime threshold d >= " + std::to_string(t.d_prime) +
                             (prime ? " met" : " not met"));

  if (d >= t.d_ufd) {
    r.ufd = UfdStatus::Yes;
    r.justifications.push_back("factoriality threshold d >= " + std::to_string(t.d_ufd) + " met");
  } else {
    r.justifications.push_back("factoriality threshold d >= " + std::to_string(t.d_ufd) +
                               " not met; factoriality undecided");
  }
  return r;
}

LssCertificate certify_lss(Int vertex_count, const std::vector<std::pair<Int, Int>>& edges, Int d) {
  if (vertex_count < 2) throw InvalidArgument("vertex_count must be at least 2");
  if (d < 1) throw InvalidArgument("d must be at least 1");
  std::set<std::pair<Int, Int>> distinct;
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references a vertex outside [1, " + std::to_string(vertex_count) + "]");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    distinct.insert(std::minmax(u, v));
  }
  const auto t = thresholds(vertex_count);
  LssCertificate c;
  c.vertex_count = vertex_count;
  c.edge_count = static_cast<Int>(distinct.size());
  c.d = d;
  c.radical_ci = d >= t.d_ci;
  c.normal_domain = d >= t.d_prime;
  c.ufd = d >= t.d_ufd;
  c.minimal_d = {t.d_ci, t.d_prime, t.d_ufd};
  return c;
}

}  // namespace frames
